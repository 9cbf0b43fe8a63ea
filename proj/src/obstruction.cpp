#include "turnkit/obstruction.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace turnkit::obstruction {

using homotopy::euler_number;

namespace {

int mod(long v, long m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

KappaState Kappa::state() const {
  if (u_plus || u_eta) return KappaState::Unknown;
  return constant ? KappaState::One : KappaState::Zero;
}

std::string Kappa::state_name() const {
  switch (state()) {
    case KappaState::Zero:
      return "0";
    case KappaState::One:
      return "1";
    default:
      return "unknown";
  }
}

std::string Kappa::form() const {
  std::string out;
  auto append = [&](const char* term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (constant) append("1");
  if (u_plus) append("u+");
  if (u_eta) append("ueta");
  return out.empty() ? "0" : out;
}

ObstructionValue ObstructionValue::zero_for(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k == 1 || k == 3) return {};
  if (k == 2) return s4_pair(0, 0);
  if (k % 2 == 1) return odd_cyclic(0);
  if (k % 4 == 2) return even_pair({}, 0);
  return even_triple({}, 0, 0);
}

ObstructionValue ObstructionValue::odd_cyclic(long c) {
  ObstructionValue v;
  v.kind_ = ObstructionKind::OddCyclic;
  v.c_ = mod(c, 4);
  return v;
}

ObstructionValue ObstructionValue::s4_pair(long u, long w) {
  ObstructionValue v;
  v.kind_ = ObstructionKind::S4Pair;
  v.u_ = mod(u, 2);
  v.v_ = mod(w, 2);
  return v;
}

ObstructionValue ObstructionValue::even_pair(Kappa kappa, long ev) {
  ObstructionValue v;
  v.kind_ = ObstructionKind::EvenPair;
  v.kappa_ = kappa;
  v.ev_ = mod(ev, 2);
  return v;
}

ObstructionValue ObstructionValue::even_triple(Kappa kappa, long ev, long s) {
  ObstructionValue v;
  v.kind_ = ObstructionKind::EvenTriple;
  v.kappa_ = kappa;
  v.ev_ = mod(ev, 2);
  v.s_ = mod(s, 2);
  return v;
}

ObstructionValue ObstructionValue::operator+(const ObstructionValue& o) const {
  if (kind_ != o.kind_) throw std::invalid_argument("obstruction values from different groups");
  ObstructionValue r = *this;
  r.c_ = mod(c_ + o.c_, 4);
  r.kappa_ = kappa_ + o.kappa_;
  r.ev_ = mod(ev_ + o.ev_, 2);
  r.s_ = mod(s_ + o.s_, 2);
  r.u_ = mod(u_ + o.u_, 2);
  r.v_ = mod(v_ + o.v_, 2);
  return r;
}

ObstructionValue ObstructionValue::operator-() const {
  ObstructionValue r = *this;
  r.c_ = mod(-c_, 4);
  return r;
}

ObstructionValue ObstructionValue::times(long n) const {
  ObstructionValue r = *this;
  r.c_ = mod(static_cast<long>(c_) * mod(n, 4), 4);
  r.kappa_ = kappa_.times(n);
  r.ev_ = mod(ev_ * (n % 2), 2);
  r.s_ = mod(s_ * (n % 2), 2);
  r.u_ = mod(u_ * (n % 2), 2);
  r.v_ = mod(v_ * (n % 2), 2);
  return r;
}

std::string ObstructionValue::kind_name() const {
  switch (kind_) {
    case ObstructionKind::Zero:
      return "Zero";
    case ObstructionKind::OddCyclic:
      return "OddCyclic";
    case ObstructionKind::EvenPair:
      return "EvenPair";
    case ObstructionKind::EvenTriple:
      return "EvenTriple";
    case ObstructionKind::S4Pair:
      return "S4Pair";
  }
  return "?";
}

std::string ObstructionValue::to_string() const {
  switch (kind_) {
    case ObstructionKind::Zero:
      return "0";
    case ObstructionKind::OddCyclic:
      return std::to_string(c_) + "ζ";
    case ObstructionKind::S4Pair:
      return "(" + std::to_string(u_) + ", " + std::to_string(v_) + ")";
    case ObstructionKind::EvenPair:
      return "(κ=" + kappa_.form() + ", ev=" + std::to_string(ev_) + ")";
    case ObstructionKind::EvenTriple:
      return "(κ=" + kappa_.form() + ", ev=" + std::to_string(ev_) + ", s=" + std::to_string(s_) + ")";
  }
  return "?";
}

Vanishing vanishes(const ObstructionValue& v) {
  bool known_nonzero = v.c() != 0 || v.ev() != 0 || v.s() != 0 || v.u() != 0 || v.v() != 0;
  KappaState ks = v.kappa().state();
  if (known_nonzero || ks == KappaState::One) return Vanishing::Nonzero;
  if (ks == KappaState::Unknown) return Vanishing::Undetermined;
  return Vanishing::Zero;
}

const char* vanishing_name(Vanishing v) {
  switch (v) {
    case Vanishing::Zero:
      return "Zero";
    case Vanishing::Nonzero:
      return "Nonzero";
    default:
      return "Undetermined";
  }
}

ObstructionValue to_plus(const SphereBundle& e) {
  const int k = e.k();
  if (k == 1 || k == 3) return ObstructionValue::zero_for(k);
  if (k == 2) return ObstructionValue::s4_pair(e.a(), 0);
  if (k % 2 == 1) return ObstructionValue::odd_cyclic(euler_number(e));
  // kappa(TO_+(tau)) := 0; ev(TO_+(sigma)) := 0 and TO_+(sigma) = 0 for k = 2 mod 4.
  if (k % 4 == 2) return ObstructionValue::even_pair(Kappa::known(0), e.a());
  return ObstructionValue::even_triple(Kappa::unknown_plus().times(e.b()), e.a(), e.b());
}

ObstructionValue to_eta(const SphereBundle& e) {
  const int k = e.k();
  if (k % 2 == 1) return ObstructionValue::zero_for(k);
  if (k == 2) {
    auto [k1, k2] = e.k1k2();
    return ObstructionValue::s4_pair(k1, k2);
  }
  if (k % 4 == 2) return ObstructionValue::even_pair(Kappa::known(e.a()), 0);
  if (k == 4)
    return ObstructionValue::even_triple(Kappa::known(e.a()) + Kappa::unknown_eta().times(e.b()), e.b(), 0);
  return ObstructionValue::even_triple(Kappa::known(e.a()), 0, 0);
}

ObstructionValue to_minus(const SphereBundle& e) {
  ObstructionValue sum = to_plus(e) + to_eta(e);
  if (e.k() == 2) {
    ObstructionValue closed = ObstructionValue::s4_pair(0, e.k1k2().second);
    if (!(closed == sum)) throw std::logic_error("TO_- closed form disagrees with TO_+ + TO_eta");
    return closed;
  }
  return sum;
}

const char* turning_type_name(TurningType t) {
  switch (t) {
    case TurningType::BiTurnable:
      return "BiTurnable";
    case TurningType::StronglyChiral:
      return "StronglyChiral";
    default:
      return "NotTurnable";
  }
}

TurningType turning_type(const SphereBundle& e) {
  Vanishing p = vanishes(to_plus(e)), m = vanishes(to_minus(e));
  if (p == Vanishing::Undetermined || m == Vanishing::Undetermined)
    throw std::logic_error("turning obstruction undetermined for " + e.to_string());
  const int zeros = (p == Vanishing::Zero) + (m == Vanishing::Zero);
  if (zeros == 2) return TurningType::BiTurnable;
  if (zeros == 1) return TurningType::StronglyChiral;
  return TurningType::NotTurnable;
}

bool stably_turnable(const SphereBundle& e) {
  return homotopy::eta_mult(2 * e.k()).apply(homotopy::stable_class(e)).is_zero();
}

linalg::AbElement stabilized_obstruction(const SphereBundle& e) {
  linalg::FgAbGroup g = homotopy::pi_stable_so(2 * e.k());
  if (g.is_trivial()) return linalg::AbElement::zero(g);
  return linalg::AbElement(g, {linalg::Integer(to_plus(e).s())});
}

EulerCriterion euler_criterion_evaluate(const SphereBundle& e) {
  const int k = e.k();
  const long eu = euler_number(e);
  EulerCriterion r;
  if (k == 1) {
    r.verdict = true;
    r.clause = "rank-two";
    r.explanation = "oriented rank-2 bundles are turnable";
    return r;
  }
  if (k == 2) {
    const long p = homotopy::spin_class_k2(e);
    r.verdict = mod(eu + p, 4) == 0 || mod(eu - p, 4) == 0;
    r.clause = "k=2";
    r.explanation = "e=" + std::to_string(eu) + ", p=" + std::to_string(p) + ": rho4(e+p)=" +
                    std::to_string(mod(eu + p, 4)) + ", rho4(e-p)=" + std::to_string(mod(eu - p, 4));
    return r;
  }
  if (k == 3) {
    r.verdict = true;
    r.clause = "k=3";
    r.explanation = "every oriented rank-6 bundle over S^6 is turnable";
    return r;
  }
  const long xi = homotopy::stable_class(e).is_zero() ? 0 : e.b();
  if (k % 2 == 0) {
    r.verdict = mod(eu, 4) == 0 && mod(xi, 2) == 0;
    r.clause = "even-k";
    r.explanation = "rho4(e)=" + std::to_string(mod(eu, 4)) + ", rho2(xi)=" + std::to_string(mod(xi, 2));
    return r;
  }
  r.verdict = mod(eu, 4) == 0;
  r.clause = "odd-k";
  r.explanation = "rho4(e)=" + std::to_string(mod(eu, 4));
  return r;
}

DecisionReport decide(const SphereBundle& e) {
  DecisionReport d;
  d.bundle = e;
  d.euler = euler_number(e);
  const linalg::AbElement xi = homotopy::stable_class(e);
  d.xi = xi.coords().empty() ? 0 : xi.coords()[0].get_si();
  d.to_plus = to_plus(e);
  d.to_minus = to_minus(e);
  d.to_eta = to_eta(e);
  d.turning_type = turning_type(e);
  Vanishing ve = vanishes(d.to_eta);
  if (ve == Vanishing::Undetermined) throw std::logic_error("TO_eta undetermined for " + e.to_string());
  d.eta_turnable = ve == Vanishing::Zero;
  d.stably_turnable = stably_turnable(e);
  d.criterion = euler_criterion_evaluate(e);
  const bool turnable = d.turning_type != TurningType::NotTurnable;
  d.divergence = d.criterion.verdict != turnable;
  if (d.divergence) {
    d.divergence_note = "Euler/KO criterion (clause " + d.criterion.clause + ") says " +
                        (d.criterion.verdict ? "turnable" : "not turnable") +
                        " but the turning obstructions say " + turning_type_name(d.turning_type);
    d.warnings.push_back("divergence: " + d.divergence_note);
  }
  if (e.k() % 2 == 0 && e.k() > 2)
    d.warnings.push_back("kappa convention: the tau-eta component of TO_+(tau) is fixed to 0");
  if (e.k() % 4 == 0)
    d.warnings.push_back("kappa convention: ev(TO_+(sigma)) is fixed to 0; tau-eta components of TO_+(sigma) (u+)"
                         " and TO_eta(sigma_8) (ueta) are undetermined");
  for (const ObstructionValue* v : {&d.to_plus, &d.to_minus, &d.to_eta})
    if (v->has_kappa() && v->kappa().state() == KappaState::Unknown) {
      d.warnings.push_back("undetermined tau-eta component: " + v->kappa().form());
      break;
    }
  return d;
}

std::vector<RelationCheck> relations_check(int k, long bound, int random_pairs, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("relations are checked for k >= 2");
  std::vector<SphereBundle> grid;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b) grid.emplace_back(k, a, b);
  const SphereBundle tau(k, 1, 0), sigma(k, 0, 1);

  std::vector<RelationCheck> out;
  auto run = [&](const std::string& name, const std::function<bool(const SphereBundle&)>& pred) {
    RelationCheck c{name, true, 0, {}};
    for (const auto& e : grid) {
      ++c.cases;
      if (!pred(e)) {
        c.passed = false;
        c.witness = e.to_string();
        break;
      }
    }
    out.push_back(std::move(c));
  };
  const std::function<ObstructionValue(const SphereBundle&)> maps[] = {to_plus, to_minus, to_eta};
  const char* names[] = {"TO_+", "TO_-", "TO_eta"};

  run("2 TO_eta = 0", [&](const SphereBundle& e) { return vanishes(to_eta(e).times(2)) == Vanishing::Zero; });
  run("TO_- = TO_+ + TO_eta", [&](const SphereBundle& e) { return to_minus(e) == to_plus(e) + to_eta(e); });
  if (k % 2 == 0) {
    run("2 TO_+ = 0", [&](const SphereBundle& e) { return vanishes(to_plus(e).times(2)) == Vanishing::Zero; });
    run("2 TO_- = 0", [&](const SphereBundle& e) { return vanishes(to_minus(e).times(2)) == Vanishing::Zero; });
  } else {
    run("2 TO_+ = TO_eta", [&](const SphereBundle& e) { return to_plus(e).times(2) == to_eta(e); });
    run("2 TO_- = TO_eta", [&](const SphereBundle& e) { return to_minus(e).times(2) == to_eta(e); });
    run("4 TO_+ = 0", [&](const SphereBundle& e) { return vanishes(to_plus(e).times(4)) == Vanishing::Zero; });
    run("4 TO_- = 0", [&](const SphereBundle& e) { return vanishes(to_minus(e).times(4)) == Vanishing::Zero; });
  }
  run("never undetermined", [&](const SphereBundle& e) {
    return vanishes(to_plus(e)) != Vanishing::Undetermined && vanishes(to_minus(e)) != Vanishing::Undetermined &&
           vanishes(to_eta(e)) != Vanishing::Undetermined;
  });

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::vector<SphereBundle> partners{tau, sigma};
  for (int i = 0; i < random_pairs; ++i) partners.emplace_back(k, coord(rng), coord(rng));
  for (int m = 0; m < 3; ++m) {
    const auto& f = maps[m];
    run(std::string(names[m]) + " linear in (a, b)", [&](const SphereBundle& e) {
      return f(e) == f(tau).times(e.a()) + f(sigma).times(e.b());
    });
    run(std::string(names[m]) + " additive", [&](const SphereBundle& e) {
      for (const auto& p : partners)
        if (!(f(e + p) == f(e) + f(p))) return false;
      return true;
    });
  }
  return out;
}

}  // namespace turnkit::obstruction
