#include "dlmkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dlmkit/enumerate.hpp"
#include "dlmkit/errors.hpp"
#include "dlmkit/families.hpp"
#include "dlmkit/graph.hpp"
#include "dlmkit/graph6.hpp"
#include "dlmkit/patterns.hpp"
#include "dlmkit/spectra.hpp"
#include "dlmkit/verify.hpp"
#include "json.hpp"

struct dlm_graph {
    dlm::Graph g;
};

struct dlm_graph_iter {
    std::vector<dlm::Graph> items;
    std::size_t pos = 0;
};

struct dlm_spectrum {
    dlm::ExactSpectrum s;
    std::string matrix;
};

struct dlm_report {
    std::string kind;
    std::vector<dlm::ClassificationReport> classifications;
    std::optional<dlm::CospectralReport> cospectral;
    std::optional<dlm::PropertyReport> property;
    bool passed = false;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
dlm_status guarded(F&& f) {
    try {
        f();
        return DLM_OK;
    } catch (const dlm::ParseError& e) {
        g_last_error = e.what();
        return DLM_ERR_PARSE;
    } catch (const dlm::DisconnectedGraph& e) {
        g_last_error = e.what();
        return DLM_ERR_DISCONNECTED;
    } catch (const dlm::DiameterTooLarge& e) {
        g_last_error = e.what();
        return DLM_ERR_DIAMETER;
    } catch (const dlm::ConvergenceFailure& e) {
        g_last_error = e.what();
        return DLM_ERR_NO_CONVERGENCE;
    } catch (const dlm::InvalidArgument& e) {
        g_last_error = e.what();
        return DLM_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DLM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return DLM_ERR_INTERNAL;
    }
}

dlm_status require(bool cond, const char* message) {
    if (cond) return DLM_OK;
    g_last_error = message;
    return DLM_ERR_INVALID_ARGUMENT;
}

std::string render_spectrum_text(const dlm::ExactSpectrum& s) {
    std::string out;
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
        const auto& e = s.entries()[i];
        if (i) out += ", ";
        if (e.root.is_integer) {
            out += e.root.value.get_str();
        } else {
            char buf[48];
            std::snprintf(buf, sizeof buf, "≈%.10g", e.root.approx());
            out += buf;
        }
        if (e.multiplicity > 1) out += "×" + std::to_string(e.multiplicity);
    }
    return out;
}

std::string rational_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string render_spectrum_json(const dlm::ExactSpectrum& s, const std::string& matrix) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : s.entries()) {
        nlohmann::json item = {{"approx", e.root.approx()}, {"multiplicity", e.multiplicity}};
        if (e.root.is_integer) {
            item["value"] = e.root.value.get_str();
            item["interval"] = nullptr;
        } else {
            item["value"] = nullptr;
            item["interval"] = {rational_string(e.root.lo), rational_string(e.root.hi)};
        }
        entries.push_back(std::move(item));
    }
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.char_polynomial().coeffs()) coeffs.push_back(c.get_str());
    nlohmann::json j = {
        {"n", s.order()}, {"matrix", matrix}, {"entries", entries}, {"char_poly", coeffs}};
    return j.dump(2);
}

std::string render_spectrum_csv(const dlm::ExactSpectrum& s) {
    std::ostringstream out;
    out << "value,approx,multiplicity\n";
    for (const auto& e : s.entries()) {
        if (e.root.is_integer) out << e.root.value.get_str();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", e.root.approx());
        out << ',' << buf << ',' << e.multiplicity << '\n';
    }
    return out.str();
}

} // namespace

extern "C" {

const char* dlm_version(void) { return "1.0.0"; }

const char* dlm_last_error(void) { return g_last_error.c_str(); }

void dlm_string_free(char* s) { std::free(s); }

dlm_status dlm_graph_from_g6(const char* line, dlm_graph** out) {
    if (dlm_status st = require(line && out, "null argument")) return st;
    return guarded([&] { *out = new dlm_graph{dlm::parse_graph6(line)}; });
}

dlm_status dlm_graph_from_edges(int n, const int* endpoints, size_t edge_count, dlm_graph** out) {
    if (dlm_status st = require(out && (endpoints || edge_count == 0), "null argument")) return st;
    return guarded([&] {
        std::vector<std::pair<int, int>> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        }
        *out = new dlm_graph{dlm::Graph::from_edges(n, edges)};
    });
}

dlm_status dlm_graph_to_g6(const dlm_graph* g, char** out) {
    if (dlm_status st = require(g && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(dlm::to_graph6(g->g)); });
}

void dlm_graph_free(dlm_graph* g) { delete g; }

int dlm_graph_order(const dlm_graph* g) { return g ? g->g.order() : 0; }

int dlm_graph_edge_count(const dlm_graph* g) { return g ? g->g.edge_count() : 0; }

int dlm_graph_is_connected(const dlm_graph* g) { return g && dlm::is_connected(g->g) ? 1 : 0; }

int dlm_graph_component_count(const dlm_graph* g) {
    return g ? dlm::connected_component_count(g->g) : 0;
}

int dlm_graph_diameter(const dlm_graph* g) {
    if (!g || !dlm::is_connected(g->g)) return -1;
    return dlm::diameter(g->g);
}

dlm_status dlm_graph_transmissions(const dlm_graph* g, int64_t* out) {
    if (dlm_status st = require(g && out, "null argument")) return st;
    return guarded([&] {
        const auto tr = dlm::transmissions(g->g);
        for (std::size_t i = 0; i < tr.size(); ++i) out[i] = tr[i];
    });
}

dlm_status dlm_graph_complement(const dlm_graph* g, dlm_graph** out) {
    if (dlm_status st = require(g && out, "null argument")) return st;
    return guarded([&] { *out = new dlm_graph{dlm::complement(g->g)}; });
}

dlm_status dlm_graph_join(const dlm_graph* a, const dlm_graph* b, dlm_graph** out) {
    if (dlm_status st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new dlm_graph{dlm::join(a->g, b->g)}; });
}

dlm_status dlm_graph_disjoint_union(const dlm_graph* a, const dlm_graph* b, dlm_graph** out) {
    if (dlm_status st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new dlm_graph{dlm::disjoint_union(a->g, b->g)}; });
}

dlm_status dlm_graph_induced(const dlm_graph* g, const int* vertices, size_t count,
                             dlm_graph** out) {
    if (dlm_status st = require(g && vertices && out, "null argument")) return st;
    return guarded([&] {
        *out = new dlm_graph{dlm::induced_subgraph(
            g->g, std::span<const int>(vertices, count))};
    });
}

dlm_status dlm_graph_canonical_g6(const dlm_graph* g, char** out) {
    if (dlm_status st = require(g && out, "null argument")) return st;
    return guarded([&] {
        *out = dup_string(dlm::to_graph6(dlm::canonical_form(g->g).to_graph()));
    });
}

int dlm_graph_isomorphic(const dlm_graph* a, const dlm_graph* b) {
    if (!a || !b) return 0;
    try {
        return dlm::isomorphic(a->g, b->g) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

dlm_status dlm_pattern(const char* name, dlm_graph** out) {
    if (dlm_status st = require(name && out, "null argument")) return st;
    return guarded([&] {
        const auto p = dlm::pattern_from_name(name);
        if (!p) throw dlm::InvalidArgument(std::string("unknown pattern ") + name);
        *out = new dlm_graph{dlm::pattern_graph(*p)};
    });
}

int dlm_graph_contains_induced(const dlm_graph* g, const dlm_graph* pattern) {
    if (!g || !pattern) return 0;
    return dlm::contains_induced(g->g, pattern->g) ? 1 : 0;
}

int dlm_graph_is_cograph(const dlm_graph* g) { return g && dlm::is_cograph(g->g) ? 1 : 0; }

int dlm_graph_j_recognize(const dlm_graph* g, int* a, int* b) {
    if (!g) return 0;
    const auto shape = dlm::j_graph_recognize(g->g);
    if (!shape) return 0;
    if (a) *a = shape->a;
    if (b) *b = shape->b;
    return 1;
}

dlm_status dlm_graph_family(const char* name, int n, int a, int b, const int* parts,
                            size_t part_count, dlm_graph** out) {
    if (dlm_status st = require(name && out, "null argument")) return st;
    return guarded([&] {
        const auto fam = dlm::family_from_name(name);
        if (!fam) throw dlm::InvalidArgument(std::string("unknown family ") + name);
        dlm::FamilySpec spec;
        spec.family = *fam;
        spec.n = n;
        spec.a = a;
        spec.b = b;
        if (parts) spec.parts.assign(parts, parts + part_count);
        *out = new dlm_graph{dlm::build(spec)};
    });
}

dlm_status dlm_family_classified(int n, dlm_graph_iter** out) {
    if (dlm_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto it = std::make_unique<dlm_graph_iter>();
        for (auto& [spec, g] : dlm::classified_family_members(n)) {
            it->items.push_back(std::move(g));
        }
        *out = it.release();
    });
}

dlm_status dlm_family_small_n(int n, dlm_graph_iter** out) {
    if (dlm_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto it = std::make_unique<dlm_graph_iter>();
        for (auto& [name, g] : dlm::small_n_members(n)) it->items.push_back(std::move(g));
        *out = it.release();
    });
}

dlm_status dlm_enumerate_connected(int n, dlm_graph_iter** out) {
    if (dlm_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto it = std::make_unique<dlm_graph_iter>();
        it->items = dlm::enumerate_connected(n);
        *out = it.release();
    });
}

int dlm_graph_iter_next(dlm_graph_iter* it, dlm_graph** out) {
    if (!it || !out || it->pos >= it->items.size()) return 0;
    *out = new dlm_graph{it->items[it->pos++]};
    return 1;
}

void dlm_graph_iter_free(dlm_graph_iter* it) { delete it; }

dlm_status dlm_spectrum_compute(const dlm_graph* g, const char* matrix, dlm_spectrum** out) {
    if (dlm_status st = require(g && matrix && out, "null argument")) return st;
    return guarded([&] {
        const std::string kind = matrix;
        if (kind == "dl") {
            *out = new dlm_spectrum{dlm::dl_spectrum(g->g), kind};
        } else if (kind == "l") {
            *out = new dlm_spectrum{dlm::laplacian_spectrum(g->g), kind};
        } else {
            throw dlm::InvalidArgument("matrix must be \"dl\" or \"l\"");
        }
    });
}

void dlm_spectrum_free(dlm_spectrum* s) { delete s; }

int dlm_spectrum_order(const dlm_spectrum* s) { return s ? s->s.order() : 0; }

int dlm_spectrum_distinct_count(const dlm_spectrum* s) { return s ? s->s.distinct_count() : 0; }

int dlm_spectrum_multiplicity(const dlm_spectrum* s, int i) {
    if (!s || i < 0 || i >= s->s.distinct_count()) return 0;
    return s->s.entries()[static_cast<std::size_t>(i)].multiplicity;
}

int dlm_spectrum_root_is_integer(const dlm_spectrum* s, int i) {
    if (!s || i < 0 || i >= s->s.distinct_count()) return 0;
    return s->s.entries()[static_cast<std::size_t>(i)].root.is_integer ? 1 : 0;
}

dlm_status dlm_spectrum_root_integer(const dlm_spectrum* s, int i, int64_t* out) {
    if (dlm_status st = require(s && out, "null argument")) return st;
    if (dlm_status st = require(i >= 0 && i < s->s.distinct_count(), "index out of range")) {
        return st;
    }
    const auto& e = s->s.entries()[static_cast<std::size_t>(i)];
    if (dlm_status st = require(e.root.is_integer, "root is not an exact integer")) return st;
    if (dlm_status st = require(e.root.value.fits_slong_p(), "root exceeds int64")) return st;
    *out = e.root.value.get_si();
    return DLM_OK;
}

double dlm_spectrum_root_approx(const dlm_spectrum* s, int i) {
    if (!s || i < 0 || i >= s->s.distinct_count()) return 0.0;
    return s->s.entries()[static_cast<std::size_t>(i)].root.approx();
}

dlm_status dlm_spectrum_root_interval(const dlm_spectrum* s, int i, char** lo, char** hi) {
    if (dlm_status st = require(s && lo && hi, "null argument")) return st;
    if (dlm_status st = require(i >= 0 && i < s->s.distinct_count(), "index out of range")) {
        return st;
    }
    const auto& e = s->s.entries()[static_cast<std::size_t>(i)];
    if (e.root.is_integer) {
        *lo = dup_string(e.root.value.get_str() + "/1");
        *hi = dup_string(e.root.value.get_str() + "/1");
    } else {
        *lo = dup_string(rational_string(e.root.lo));
        *hi = dup_string(rational_string(e.root.hi));
    }
    return DLM_OK;
}

dlm_status dlm_spectrum_char_poly(const dlm_spectrum* s, char** out) {
    if (dlm_status st = require(s && out, "null argument")) return st;
    *out = dup_string(s->s.char_polynomial().to_string());
    return DLM_OK;
}

dlm_status dlm_spectrum_render(const dlm_spectrum* s, const char* format, char** out) {
    if (dlm_status st = require(s && format && out, "null argument")) return st;
    return guarded([&] {
        const std::string f = format;
        if (f == "text") {
            *out = dup_string(render_spectrum_text(s->s));
        } else if (f == "json") {
            *out = dup_string(render_spectrum_json(s->s, s->matrix));
        } else if (f == "csv") {
            *out = dup_string(render_spectrum_csv(s->s));
        } else {
            throw dlm::InvalidArgument("format must be text, json or csv");
        }
    });
}

int dlm_spectrum_equal(const dlm_spectrum* a, const dlm_spectrum* b) {
    if (!a || !b) return 0;
    return a->s == b->s ? 1 : 0;
}

dlm_status dlm_verify_run(const char* kind, const dlm_verify_opts* opts, dlm_report** out) {
    if (dlm_status st = require(kind && opts && out, "null argument")) return st;
    return guarded([&] {
        dlm::SweepOptions sweep;
        sweep.workers = opts->workers > 0 ? opts->workers : 1;
        if (opts->corpus_path) sweep.corpus_path = opts->corpus_path;
        sweep.corpus_connected_only = opts->connected_only != 0;
        if (opts->cache_dir) sweep.cache_dir = opts->cache_dir;
        const int samples = opts->samples > 0 ? opts->samples : 1000;
        const int max_n = opts->max_n > 0 ? opts->max_n : 14;

        auto rep = std::make_unique<dlm_report>();
        rep->kind = kind;
        const std::string k = kind;
        if (k == "thm33") {
            rep->classifications.push_back(dlm::classify_sweep(opts->n, sweep));
            rep->passed = rep->classifications.back().passed();
        } else if (k == "remark45") {
            dlm::SweepOptions basic;
            basic.workers = sweep.workers;
            basic.cache_dir = sweep.cache_dir;
            rep->classifications.push_back(dlm::classify_sweep(4, basic));
            rep->classifications.push_back(dlm::classify_sweep(5, basic));
            rep->passed =
                rep->classifications[0].passed() && rep->classifications[1].passed();
        } else if (k == "formulas") {
            rep->property = dlm::formulas_check(max_n);
            rep->passed = rep->property->passed();
        } else if (k == "properties") {
            rep->property = dlm::property_suite(opts->n, samples, opts->seed, sweep);
            rep->passed = rep->property->passed();
        } else if (k == "cospectral") {
            rep->cospectral = dlm::ds_check(opts->n, sweep);
            rep->passed = rep->cospectral->passed();
        } else {
            throw dlm::InvalidArgument("unknown verify kind " + k);
        }
        *out = rep.release();
    });
}

int dlm_report_passed(const dlm_report* r) { return r && r->passed ? 1 : 0; }

dlm_status dlm_report_render(const dlm_report* r, const char* format, char** out) {
    if (dlm_status st = require(r && format && out, "null argument")) return st;
    return guarded([&] {
        const std::string f = format;
        std::string text;
        if (f == "json") {
            if (r->kind == "remark45") {
                nlohmann::json j = {{"kind", r->kind},
                                    {"verdict", r->passed ? "match" : "mismatch"},
                                    {"reports", nlohmann::json::array()}};
                for (const auto& c : r->classifications) {
                    j["reports"].push_back(nlohmann::json::parse(dlm::to_json(c)));
                }
                text = j.dump(2);
            } else if (!r->classifications.empty()) {
                text = dlm::to_json(r->classifications.front());
            } else if (r->cospectral) {
                text = dlm::to_json(*r->cospectral);
            } else {
                text = dlm::to_json(*r->property);
            }
        } else if (f == "csv") {
            if (!r->classifications.empty()) {
                text = dlm::to_csv(r->classifications.front());
                for (std::size_t i = 1; i < r->classifications.size(); ++i) {
                    const std::string more = dlm::to_csv(r->classifications[i]);
                    text += more.substr(more.find('\n') + 1); // drop repeated header
                }
            } else if (r->cospectral) {
                text = dlm::to_csv(*r->cospectral);
            } else {
                text = dlm::to_csv(*r->property);
            }
        } else if (f == "text") {
            for (const auto& c : r->classifications) text += dlm::to_text(c);
            if (r->cospectral) text += dlm::to_text(*r->cospectral);
            if (r->property) text += dlm::to_text(*r->property);
        } else {
            throw dlm::InvalidArgument("format must be text, json or csv");
        }
        *out = dup_string(text);
    });
}

void dlm_report_free(dlm_report* r) { delete r; }

} // extern "C"
