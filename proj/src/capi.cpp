#include "turnkit/turnkit.h"

#include "turnkit/commands.hpp"
#include "turnkit/quat.hpp"

#include <exception>
#include <string>

struct tk_report {
  turnkit::report::Report report;
  std::string text, record;
};

struct tk_complex {
  std::shared_ptr<const turnkit::cw::CwComplex> complex;
};

namespace {

using turnkit::commands::Report;
using turnkit::cw::Cochain;

thread_local std::string last_error;

template <class F>
tk_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return TK_OK;
  } catch (const turnkit::quat::NumericError& e) {
    last_error = e.what();
    return TK_NUMERIC_FAILURE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return TK_INVALID_INPUT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TK_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return TK_INTERNAL;
  }
}

template <class F>
tk_status build(tk_report** out, F&& f) {
  if (out == nullptr) {
    last_error = "null output pointer";
    return TK_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] { *out = new tk_report{f(), {}, {}}; });
}

turnkit::commands::Coordinates coordinates(const tk_coords* c) {
  if (c == nullptr) throw std::invalid_argument("null coordinates");
  turnkit::commands::Coordinates out;
  out.k = c->k;
  if (c->set & TK_COORD_A) out.a = c->a;
  if (c->set & TK_COORD_B) out.b = c->b;
  if (c->set & TK_COORD_K1) out.k1 = c->k1;
  if (c->set & TK_COORD_K2) out.k2 = c->k2;
  if (c->set & TK_COORD_EULER) out.euler = c->euler;
  if (c->set & TK_COORD_XI) out.xi = c->xi;
  return out;
}

const turnkit::cw::CwComplex& complex_of(const tk_complex* c) {
  if (c == nullptr || !c->complex) throw std::invalid_argument("null complex handle");
  return *c->complex;
}

Cochain cochain(const long* data, size_t length) {
  if (data == nullptr && length > 0) throw std::invalid_argument("null cochain");
  return data ? Cochain(data, data + length) : Cochain{};
}

std::vector<Cochain> cochains(const long* data, size_t length, size_t count) {
  if (data == nullptr && count > 0 && length > 0) throw std::invalid_argument("null candidate list");
  std::vector<Cochain> out;
  for (size_t i = 0; i < count; ++i) out.push_back(cochain(data ? data + i * length : nullptr, length));
  return out;
}

turnkit::cw::Ring ring_of(tk_ring r) {
  switch (r) {
    case TK_RING_Z: return turnkit::cw::Ring::Z;
    case TK_RING_Z2: return turnkit::cw::Ring::Z2;
    case TK_RING_Z4: return turnkit::cw::Ring::Z4;
  }
  throw std::invalid_argument("unknown ring");
}

}  // namespace

extern "C" {

const char* tk_version(void) { return "0.1.0"; }

const char* tk_last_error(void) { return last_error.c_str(); }

tk_status tk_sphere(const tk_coords* coords, tk_report** out) {
  return build(out, [&] { return turnkit::commands::sphere(coordinates(coords)); });
}

tk_status tk_s4_table(long range, tk_report** out) {
  return build(out, [&] { return turnkit::commands::s4_table(range); });
}

tk_status tk_groupoid(int k, tk_report** out) {
  return build(out, [&] { return turnkit::commands::groupoid(k); });
}

tk_status tk_gauge(const tk_coords* coords, tk_report** out) {
  return build(out, [&] { return turnkit::commands::gauge(coordinates(coords)); });
}

tk_status tk_samelson(int k, tk_report** out) {
  return build(out, [&] { return turnkit::commands::samelson(k); });
}

tk_status tk_relations(int k, long bound, int random_pairs, uint64_t seed, tk_report** out) {
  return build(out, [&] { return turnkit::commands::relations(k, bound, random_pairs, seed); });
}

tk_status tk_complex_load(const char* path, tk_complex** out) {
  if (out == nullptr) return TK_INVALID_INPUT;
  *out = nullptr;
  return guarded([&] {
    if (path == nullptr) throw std::invalid_argument("null path");
    *out = new tk_complex{turnkit::cw::load_complex(path)};
  });
}

tk_status tk_complex_parse(const char* text, tk_complex** out) {
  if (out == nullptr) return TK_INVALID_INPUT;
  *out = nullptr;
  return guarded([&] {
    if (text == nullptr) throw std::invalid_argument("null text");
    *out = new tk_complex{turnkit::cw::parse_complex(text)};
  });
}

void tk_complex_free(tk_complex* c) { delete c; }

size_t tk_complex_cells(const tk_complex* c, int degree) {
  if (c == nullptr || !c->complex || degree < 0 || degree > c->complex->dimension()) return 0;
  return c->complex->cells(degree);
}

tk_status tk_cw_cohomology(const tk_complex* c, tk_ring ring, int degree, int with_generators, tk_report** out) {
  return build(out, [&] {
    return turnkit::commands::cw_cohomology(complex_of(c), ring_of(ring), degree, with_generators != 0);
  });
}

tk_status tk_cw_sq2(const tk_complex* c, int degree, tk_report** out) {
  return build(out, [&] { return turnkit::commands::cw_sq2(complex_of(c), degree); });
}

tk_status tk_cw_tc(const tk_complex* c, int k, const long* euler, size_t length, const long* candidates,
                   size_t count, int stably_trivial, tk_report** out) {
  return build(out, [&] {
    return turnkit::commands::cw_tc(complex_of(c), k, cochain(euler, length), cochains(candidates, length, count),
                                    stably_trivial != 0);
  });
}

tk_status tk_cw_modify_euler(const tk_complex* c, int k, const long* euler, size_t length, const size_t* cells,
                             const long* js, size_t mods, tk_report** out) {
  return build(out, [&] {
    if (mods > 0 && (cells == nullptr || js == nullptr)) throw std::invalid_argument("null modification list");
    std::vector<std::pair<std::size_t, long>> list;
    for (size_t i = 0; i < mods; ++i) list.emplace_back(cells[i], js[i]);
    return turnkit::commands::cw_modify_euler(complex_of(c), k, cochain(euler, length), list);
  });
}

tk_status tk_cw_thomas(const tk_complex* c, int k, const long* euler, size_t length, const long* candidates,
                       size_t count, tk_report** out) {
  return build(out, [&] {
    return turnkit::commands::cw_thomas(complex_of(c), k, cochain(euler, length), cochains(candidates, length, count));
  });
}

tk_status tk_quat_extract(int k1, int k2, int resolution, uint64_t seed, tk_report** out) {
  return build(out, [&] { return turnkit::commands::quat_extract(k1, k2, resolution, seed); });
}

tk_status tk_quat_commute(int k1, int k2, int samples, uint64_t seed, tk_report** out) {
  return build(out, [&] { return turnkit::commands::quat_commute(k1, k2, samples, seed); });
}

tk_status tk_quat_kirchhoff(int resolution, tk_report** out) {
  return build(out, [&] { return turnkit::commands::quat_kirchhoff(resolution); });
}

const char* tk_report_render(tk_report* r, tk_format format) {
  if (r == nullptr) return "";
  std::string& slot = format == TK_FORMAT_RECORD ? r->record : r->text;
  if (slot.empty())
    slot = format == TK_FORMAT_RECORD ? turnkit::report::render_record(r->report)
                                      : turnkit::report::render_text(r->report);
  return slot.c_str();
}

tk_outcome tk_report_outcome(const tk_report* r) {
  return r != nullptr && r->report.outcome == turnkit::report::Outcome::Undecided ? TK_OUTCOME_UNDECIDED
                                                                                 : TK_OUTCOME_DECIDED;
}

tk_status tk_report_parse(const char* record, tk_report** out) {
  return build(out, [&] {
    if (record == nullptr) throw std::invalid_argument("null record");
    return turnkit::report::parse_record(record);
  });
}

int tk_report_equal(const tk_report* x, const tk_report* y) {
  return x != nullptr && y != nullptr && x->report == y->report;
}

void tk_report_free(tk_report* r) { delete r; }

}  // extern "C"
