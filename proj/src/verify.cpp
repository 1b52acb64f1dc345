#include "dlmkit/verify.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "dlmkit/enumerate.hpp"
#include "dlmkit/families.hpp"
#include "dlmkit/graph6.hpp"
#include "dlmkit/jacobi.hpp"
#include "dlmkit/patterns.hpp"
#include "dlmkit/spectra.hpp"

namespace dlm {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

std::string descriptor_string(const RealRoot& r) {
    if (r.is_integer) return r.value.get_str();
    char buf[48];
    std::snprintf(buf, sizeof buf, "~%.10g", r.approx());
    return buf;
}

IntPoly poly_from_string(const std::string& s) {
    std::vector<mpz_class> coeffs;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        coeffs.emplace_back(s.substr(start, end - start));
        start = end + 1;
    }
    return IntPoly(std::move(coeffs));
}

void parallel_for(std::size_t total, int workers,
                  const std::function<void(std::size_t, std::size_t)>& run_range) {
    if (workers <= 1 || total < 2) {
        run_range(0, total);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), total);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (total + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { run_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

int largest_root_multiplicity(const std::vector<std::pair<IntPoly, int>>& factors) {
    if (factors.size() == 1) return factors.front().second;
    const IntPoly* best_poly = nullptr;
    RealRoot best_root;
    int best_exp = 0;
    for (const auto& [f, exp] : factors) {
        std::vector<RealRoot> roots = isolate_real_roots(f);
        if (roots.empty()) continue;
        RealRoot top = roots.back();
        if (best_poly == nullptr || compare_real_roots(f, top, *best_poly, best_root) > 0) {
            best_poly = &f;
            best_root = std::move(top);
            best_exp = exp;
        }
    }
    return best_exp;
}

struct SweepItem {
    Graph g;
    std::string g6;
    std::string poly_str;
    int m1 = 0;
    int diameter = 0;
    bool p5_free = false;
    int wbar = 0;
    std::string descriptor;
};

IntSymMatrix dl_matrix_from_table(const DistanceTable& t) {
    const int n = t.order();
    IntSymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, mpz_class(static_cast<long>(t.row_sum(i))));
        for (int j = i + 1; j < n; ++j) m.set(i, j, mpz_class(-t.at(i, j)));
    }
    return m;
}

void fill_item(SweepItem& it, bool with_descriptors) {
    const DistanceTable t = distance_table(it.g);
    const IntPoly poly = char_poly(dl_matrix_from_table(t));
    const auto factors = squarefree_decompose(poly);
    it.g6 = to_graph6(it.g);
    it.poly_str = poly.to_string();
    it.m1 = largest_root_multiplicity(factors);
    it.diameter = t.max_entry();
    it.p5_free = is_p5_free(it.g);
    it.wbar = connected_component_count(complement(it.g));
    if (with_descriptors) {
        const ExactSpectrum s = ExactSpectrum::from_char_poly(poly);
        it.descriptor = descriptor_string(s.largest().root);
    }
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 1469598103934665603ull) {
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

struct SweepInput {
    std::vector<Graph> graphs;
    std::uint64_t corpus_hash = 0;
};

SweepInput sweep_input(int n, const SweepOptions& options) {
    SweepInput in;
    if (options.corpus_path) {
        std::ifstream f(*options.corpus_path);
        if (!f) throw InvalidArgument("cannot open corpus file " + *options.corpus_path);
        IngestOptions io;
        io.connected_only = options.corpus_connected_only;
        io.strict = true;
        IngestResult res = ingest_graph6_stream(f, io);
        std::uint64_t h = fnv1a("corpus");
        for (const Graph& g : res.graphs) {
            if (g.order() != n) {
                throw InvalidArgument("corpus graph order " + std::to_string(g.order()) +
                                      " does not match n=" + std::to_string(n));
            }
            if (!is_connected(g)) {
                throw InvalidArgument(
                    "corpus contains a disconnected graph; pass --connected-only to drop them");
            }
            h = fnv1a(to_graph6(g), h);
        }
        in.graphs = std::move(res.graphs);
        in.corpus_hash = h;
    } else {
        if (n < 2 || n > 9) {
            throw InvalidArgument("built-in sweeps cover 2 <= n <= 9; supply a corpus beyond");
        }
        in.graphs = enumerate_connected(n);
        in.corpus_hash = fnv1a("builtin:" + std::to_string(n));
    }
    return in;
}

std::string cache_file_path(const std::string& dir, int n, std::uint64_t hash) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, hash);
    return dir + "/sweep-n" + std::to_string(n) + "-" + buf + ".tsv";
}

bool load_cache(const std::string& path, std::vector<SweepItem>& items) {
    std::ifstream f(path);
    if (!f) return false;
    std::string line;
    std::size_t i = 0;
    while (std::getline(f, line)) {
        if (i >= items.size()) return false;
        std::istringstream ls(line);
        std::string g6, poly;
        int m1 = 0, diam = 0, p5 = 0, wbar = 0;
        std::string descr;
        if (!(ls >> g6 >> diam >> p5 >> wbar >> m1 >> poly)) return false;
        ls >> descr; // optional
        if (g6 != items[i].g6) return false;
        items[i].poly_str = poly;
        items[i].m1 = m1;
        items[i].diameter = diam;
        items[i].p5_free = p5 != 0;
        items[i].wbar = wbar;
        items[i].descriptor = descr;
        ++i;
    }
    return i == items.size();
}

void save_cache(const std::string& path, const std::vector<SweepItem>& items) {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) return; // caching is best-effort
        for (const auto& it : items) {
            f << it.g6 << '\t' << it.diameter << '\t' << (it.p5_free ? 1 : 0) << '\t' << it.wbar
              << '\t' << it.m1 << '\t' << it.poly_str;
            if (!it.descriptor.empty()) f << '\t' << it.descriptor;
            f << '\n';
        }
    }
    std::filesystem::rename(tmp, path, ec);
}

std::vector<SweepItem> compute_sweep(int n, const SweepOptions& options) {
    SweepInput in = sweep_input(n, options);
    std::vector<SweepItem> items(in.graphs.size());
    for (std::size_t i = 0; i < in.graphs.size(); ++i) {
        items[i].g = std::move(in.graphs[i]);
        items[i].g6 = to_graph6(items[i].g);
    }

    std::string cache_path;
    if (options.cache_dir) {
        cache_path = cache_file_path(*options.cache_dir, n, in.corpus_hash);
        bool ok = load_cache(cache_path, items);
        if (ok && options.with_descriptors) {
            for (const auto& it : items) {
                if (it.descriptor.empty()) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return items;
    }

    parallel_for(items.size(), options.workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) fill_item(items[i], options.with_descriptors);
    });

    if (!cache_path.empty()) save_cache(cache_path, items);
    return items;
}

std::vector<std::pair<std::string, Graph>> predicted_members(int n) {
    std::vector<std::pair<std::string, Graph>> out;
    if (n >= 6) {
        for (auto& [spec, g] : classified_family_members(n)) {
            out.emplace_back(family_name(spec.family), std::move(g));
        }
    } else if (n == 4 || n == 5) {
        out = small_n_members(n);
    } else {
        throw InvalidArgument("classification sweeps are defined for n >= 4");
    }
    return out;
}

std::string make_key(int n, const std::string& poly_str) {
    return std::to_string(n) + ";" + poly_str;
}

mpz_class max_transmission(const Graph& g) {
    mpz_class m = 0;
    for (const long long tr : transmissions(g)) {
        if (mpz_class(static_cast<long>(tr)) > m) m = mpz_class(static_cast<long>(tr));
    }
    return m;
}

} // namespace

void SuiteResult::fail(std::string witness) {
    pass = false;
    if (counterexamples.size() < kMaxWitnesses) {
        counterexamples.push_back(std::move(witness));
    } else if (counterexamples.size() == kMaxWitnesses) {
        counterexamples.push_back("...");
    }
}

bool ClassificationReport::passed() const {
    if (!match) return false;
    for (const auto& s : suites) {
        if (!s.pass) return false;
    }
    return true;
}

bool PropertyReport::passed() const {
    for (const auto& s : suites) {
        if (!s.pass) return false;
    }
    return true;
}

ClassificationReport classify_sweep(int n, const SweepOptions& options) {
    if (n < 4) throw InvalidArgument("classification sweeps are defined for n >= 4");
    const std::vector<SweepItem> items = compute_sweep(n, options);

    ClassificationReport rep;
    rep.n = n;
    rep.count = static_cast<long long>(items.size());

    std::vector<const SweepItem*> members;
    for (const auto& it : items) {
        if (it.m1 == n - 3) members.push_back(&it);
        GraphRecord rec;
        rec.g6 = it.g6;
        rec.largest_descriptor = it.descriptor;
        rec.multiplicity = it.m1;
        rec.diameter = it.diameter;
        rec.p5_free = it.p5_free;
        rec.complement_components = it.wbar;
        rep.records.push_back(std::move(rec));
    }

    std::map<CanonicalForm, std::string> expect_canon;
    for (const auto& [name, g] : predicted_members(n)) {
        expect_canon.emplace(canonical_form(g), to_graph6(g));
    }
    std::map<CanonicalForm, std::string> found_canon;
    for (const SweepItem* it : members) {
        found_canon.emplace(canonical_form(it->g), it->g6);
        rep.class_members.push_back(it->g6);
    }
    std::sort(rep.class_members.begin(), rep.class_members.end());
    for (const auto& [cf, g6] : expect_canon) {
        rep.expected.push_back(g6);
        if (!found_canon.contains(cf)) rep.missing.push_back(g6);
    }
    std::sort(rep.expected.begin(), rep.expected.end());
    for (const auto& [cf, g6] : found_canon) {
        if (!expect_canon.contains(cf)) rep.unexpected.push_back(g6);
    }
    std::sort(rep.missing.begin(), rep.missing.end());
    std::sort(rep.unexpected.begin(), rep.unexpected.end());
    rep.match = rep.missing.empty() && rep.unexpected.empty();

    // Structural facts about the extracted class.
    SuiteResult p5{"class-p5-free"};
    SuiteResult diam{"class-diameter-2"};
    SuiteResult compdis{"class-complement-disconnected"};
    SuiteResult integral{"class-largest-integral"};
    SuiteResult trbound{"class-largest-ge-maxtr-plus-2"};
    SuiteResult split{"class-three-or-four-distinct"};
    SuiteResult formula{"class-spectrum-matches-formula"};

    std::set<std::string> formula_keys;
    if (n >= 6) {
        for (const auto& [spec, g] : classified_family_members(n)) {
            formula_keys.insert(closed_form_dl_spectrum(spec).key());
        }
    }
    for (const SweepItem* it : members) {
        if (!it->p5_free) p5.fail(it->g6);
        if (n >= 6) {
            if (it->wbar < 2) compdis.fail(it->g6);
            if (it->diameter != 2) diam.fail(it->g6);
            const ExactSpectrum s = ExactSpectrum::from_char_poly(poly_from_string(it->poly_str));
            if (!s.largest().root.is_integer) {
                integral.fail(it->g6);
            } else if (s.largest().root.value < max_transmission(it->g) + 2) {
                trbound.fail(it->g6);
            }
            if (s.distinct_count() != 3 && s.distinct_count() != 4) split.fail(it->g6);
            if (!formula_keys.contains(s.key())) formula.fail(it->g6);
        }
    }
    rep.suites = {p5};
    if (n >= 6) {
        rep.suites.push_back(compdis);
        rep.suites.push_back(diam);
        rep.suites.push_back(integral);
        rep.suites.push_back(trbound);
        rep.suites.push_back(split);
        rep.suites.push_back(formula);
    }
    return rep;
}

CospectralReport ds_check(int n, const SweepOptions& options) {
    if (n < 4) throw InvalidArgument("cospectral sweeps are defined for n >= 4");
    const std::vector<SweepItem> items = compute_sweep(n, options);

    CospectralReport rep;
    rep.n = n;
    rep.count = static_cast<long long>(items.size());

    std::unordered_map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < items.size(); ++i) {
        by_key[make_key(n, items[i].poly_str)].push_back(i);
    }
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [key, idxs] : by_key) {
        if (idxs.size() < 2) continue;
        std::vector<std::string> g6s;
        for (std::size_t i : idxs) g6s.push_back(items[i].g6);
        std::sort(g6s.begin(), g6s.end());
        groups.emplace(key, std::move(g6s));
    }
    for (auto& [key, g6s] : groups) rep.groups.push_back({key, g6s});

    SuiteResult singleton{"classified-members-determined-by-spectrum"};
    for (const auto& [name, g] : predicted_members(n)) {
        const std::string key = ExactSpectrum::of_matrix(distance_laplacian(g)).key();
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            singleton.fail(to_graph6(g) + " (absent from sweep)");
        } else if (it->second.size() != 1) {
            singleton.fail(to_graph6(g) + " (cospectral mates found)");
        }
        ++rep.classified_count;
    }
    rep.all_classified_singletons = singleton.pass;
    rep.suites.push_back(std::move(singleton));
    return rep;
}

std::vector<Graph> all_graph_classes(int n) {
    if (n < 1 || n > 7) throw InvalidArgument("all-graph classes generated for n <= 7");
    std::vector<std::vector<Graph>> levels(static_cast<std::size_t>(n) + 1);
    levels[1] = {Graph::empty_graph(1)};
    for (int k = 2; k <= n; ++k) levels[static_cast<std::size_t>(k)] = enumerate_connected(k);

    std::vector<Graph> out;
    std::vector<const Graph*> parts;
    // Multisets of connected components: sizes non-increasing, and within a
    // size the class index non-increasing, so every multiset shows up once.
    auto rec = [&](auto&& self, int remaining, int size_cap, int idx_cap) -> void {
        if (remaining == 0) {
            Graph acc = *parts.front();
            for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, *parts[i]);
            out.push_back(std::move(acc));
            return;
        }
        for (int s = std::min(size_cap, remaining); s >= 1; --s) {
            const auto& lvl = levels[static_cast<std::size_t>(s)];
            const int start = (s == size_cap) ? idx_cap : static_cast<int>(lvl.size()) - 1;
            for (int idx = start; idx >= 0; --idx) {
                parts.push_back(&lvl[static_cast<std::size_t>(idx)]);
                self(self, remaining - s, s, idx);
                parts.pop_back();
            }
        }
    };
    rec(rec, n, n, n <= 1 ? 0 : static_cast<int>(levels[static_cast<std::size_t>(n)].size()) - 1);
    return out;
}

bool interlacing_check(const Graph& g, std::span<const int> subset) {
    constexpr double kTol = 1e-7;
    const IntSymMatrix a = distance_laplacian(g);
    std::vector<int> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    const IntSymMatrix m = a.principal_submatrix(keep);
    const std::vector<double> la = numeric_eigenvalues(a);
    const std::vector<double> lm = numeric_eigenvalues(m);
    const int nn = a.order();
    const int mm = m.order();
    for (int i = 0; i < mm; ++i) {
        if (!(la[static_cast<std::size_t>(i)] + kTol >= lm[static_cast<std::size_t>(i)] &&
              lm[static_cast<std::size_t>(i)] >=
                  la[static_cast<std::size_t>(nn - mm + i)] - kTol)) {
            return false;
        }
    }
    return true;
}

namespace {

// Walks two exact spectra entry lists in descending order, invoking
// visit(entry_a, entry_b) once per expanded index.
template <typename F>
void zip_expanded(const ExactSpectrum& a, const ExactSpectrum& b, F&& visit) {
    std::size_t ia = 0, ib = 0;
    int ca = 0, cb = 0;
    const int n = a.order();
    for (int k = 0; k < n; ++k) {
        visit(a.entries()[ia], b.entries()[ib]);
        if (++ca == a.entries()[ia].multiplicity) {
            ++ia;
            ca = 0;
        }
        if (++cb == b.entries()[ib].multiplicity) {
            ++ib;
            cb = 0;
        }
    }
}

} // namespace

PropertyReport property_suite(int n, int sample_budget, std::uint64_t seed,
                              const SweepOptions& options) {
    if (n < 2) throw InvalidArgument("property suites need n >= 2");
    const std::vector<SweepItem> items = compute_sweep(n, options);
    std::mt19937_64 rng(seed);

    PropertyReport rep;
    rep.n = n;
    rep.count = static_cast<long long>(items.size());

    // Infrastructure invariants.
    {
        SuiteResult count{"enumeration-count"};
        if (!options.corpus_path && n <= 9 &&
            static_cast<long long>(items.size()) != connected_graph_count(n)) {
            count.fail("count=" + std::to_string(items.size()));
        }
        rep.suites.push_back(std::move(count));
    }
    {
        SuiteResult rt{"graph6-roundtrip"};
        SuiteResult inv{"complement-involution"};
        SuiteResult parity{"transmission-parity"};
        for (const auto& it : items) {
            if (parse_graph6(it.g6) != it.g) rt.fail(it.g6);
            if (complement(complement(it.g)) != it.g) inv.fail(it.g6);
            long long total = 0;
            for (long long tr : transmissions(it.g)) total += tr;
            if (total % 2 != 0) parity.fail(it.g6);
        }
        rep.suites.push_back(std::move(rt));
        rep.suites.push_back(std::move(inv));
        rep.suites.push_back(std::move(parity));
    }
    if (n <= 8) {
        SuiteResult fw{"distance-oracle-floyd-warshall"};
        for (const auto& it : items) {
            const int nn = it.g.order();
            std::vector<int> d(static_cast<std::size_t>(nn) * nn, 1 << 20);
            for (int i = 0; i < nn; ++i) {
                d[static_cast<std::size_t>(i) * nn + i] = 0;
                for (int j = 0; j < nn; ++j) {
                    if (it.g.adjacent(i, j)) d[static_cast<std::size_t>(i) * nn + j] = 1;
                }
            }
            for (int k = 0; k < nn; ++k) {
                for (int i = 0; i < nn; ++i) {
                    for (int j = 0; j < nn; ++j) {
                        d[static_cast<std::size_t>(i) * nn + j] =
                            std::min(d[static_cast<std::size_t>(i) * nn + j],
                                     d[static_cast<std::size_t>(i) * nn + k] +
                                         d[static_cast<std::size_t>(k) * nn + j]);
                    }
                }
            }
            const DistanceTable t = distance_table(it.g);
            bool ok = true;
            for (int i = 0; i < nn && ok; ++i) {
                for (int j = 0; j < nn && ok; ++j) {
                    ok = d[static_cast<std::size_t>(i) * nn + j] == t.at(i, j);
                }
            }
            if (!ok) fw.fail(it.g6);
        }
        rep.suites.push_back(std::move(fw));
    }
    {
        SuiteResult canon{"canonical-form-invariance"};
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int t = 0; t < std::min<int>(sample_budget, 200); ++t) {
            const Graph& g = items[rng() % items.size()].g;
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) {
                        edges.emplace_back(perm[static_cast<std::size_t>(u)],
                                           perm[static_cast<std::size_t>(v)]);
                    }
                }
            }
            const Graph h = Graph::from_edges(n, edges);
            if (canonical_form(g) != canonical_form(h)) canon.fail(to_graph6(g));
        }
        rep.suites.push_back(std::move(canon));
    }

    // Exact-linalg invariants from the characteristic polynomial alone.
    {
        SuiteResult kernel{"dl-kernel-multiplicity-one"};
        SuiteResult product{"squarefree-product-identity"};
        SuiteResult sum{"multiplicities-sum"};
        for (const auto& it : items) {
            const IntPoly p = poly_from_string(it.poly_str);
            const auto factors = squarefree_decompose(p);
            IntPoly prod = IntPoly::constant(1);
            int degsum = 0;
            bool zero_once = false;
            for (const auto& [f, exp] : factors) {
                for (int e = 0; e < exp; ++e) prod = prod * f;
                degsum += f.degree() * exp;
                if (f.eval(0) == 0 && exp == 1) zero_once = true;
                if (f.eval(0) == 0 && exp != 1) zero_once = false;
            }
            if (!(prod == p)) product.fail(it.g6);
            if (degsum != n) sum.fail(it.g6);
            if (!zero_once) kernel.fail(it.g6);
        }
        rep.suites.push_back(std::move(kernel));
        rep.suites.push_back(std::move(product));
        rep.suites.push_back(std::move(sum));
    }

    // Theorem 2.2: diameter <= 2 transfer, exact + eigenspace residual.
    if (n <= 7) {
        SuiteResult exact{"thm22-diameter2-transfer-exact"};
        SuiteResult espace{"thm22-eigenspace-residual"};
        for (const auto& it : items) {
            if (it.diameter > 2) continue;
            const ExactSpectrum direct = dl_spectrum(it.g);
            const ExactSpectrum via = dl_spectrum_from_laplacian(it.g);
            if (!(direct == via)) exact.fail(it.g6);

            const IntSymMatrix lap = laplacian(it.g);
            const IntSymMatrix dl = distance_laplacian(it.g);
            const JacobiResult jr = jacobi_eigen(lap);
            // Skip the constant eigenvector (eigenvalue 0, the smallest).
            for (std::size_t k = 0; k + 1 < jr.values.size(); ++k) {
                const double mu = jr.values[k];
                const double target = 2.0 * n - mu;
                double resid = 0.0;
                for (int i = 0; i < n; ++i) {
                    double acc = 0.0;
                    for (int j = 0; j < n; ++j) {
                        acc += dl.at(i, j).get_d() * jr.vectors[k][static_cast<std::size_t>(j)];
                    }
                    acc -= target * jr.vectors[k][static_cast<std::size_t>(i)];
                    resid += acc * acc;
                }
                if (std::sqrt(resid) > 1e-6) {
                    espace.fail(it.g6);
                    break;
                }
            }
        }
        rep.suites.push_back(std::move(exact));
        rep.suites.push_back(std::move(espace));
    }

    // Theorem 2.3 + Lemma 3.2 need full exact spectra.
    if (n <= 7) {
        SuiteResult bound{"thm23-second-smallest-at-least-n"};
        SuiteResult equality{"thm23-equality-iff-complement-disconnected"};
        SuiteResult mult{"thm23-multiplicity-of-n"};
        SuiteResult tr{"lemma32-largest-above-max-transmission"};
        SuiteResult treq{"lemma32-equality-iff-complete"};
        for (const auto& it : items) {
            const ExactSpectrum s = ExactSpectrum::from_char_poly(poly_from_string(it.poly_str));
            const auto& entries = s.entries();
            const auto& second_smallest = entries[entries.size() - 2];
            const int cmp_n =
                ExactSpectrum::compare_entry_to_integer(s, second_smallest, mpz_class(n));
            if (cmp_n < 0) bound.fail(it.g6);
            if ((cmp_n == 0) != (it.wbar >= 2)) equality.fail(it.g6);
            if (s.multiplicity_of_integer(mpz_class(n)) != it.wbar - 1) mult.fail(it.g6);

            const mpz_class maxtr = max_transmission(it.g);
            const int cmp_tr =
                ExactSpectrum::compare_entry_to_integer(s, s.largest(), maxtr + 1);
            if (cmp_tr < 0) tr.fail(it.g6);
            const bool complete = it.g.edge_count() == n * (n - 1) / 2;
            if ((cmp_tr == 0) != complete) treq.fail(it.g6);
        }
        rep.suites.push_back(std::move(bound));
        rep.suites.push_back(std::move(equality));
        rep.suites.push_back(std::move(mult));
        rep.suites.push_back(std::move(tr));
        rep.suites.push_back(std::move(treq));
    }

    // Theorem 2.4: edge deletion never decreases any sorted eigenvalue.
    if (n <= 8) {
        SuiteResult mono{"thm24-edge-deletion-monotone"};
        int done = 0;
        int guard = 0;
        while (done < sample_budget && guard < sample_budget * 20) {
            ++guard;
            const SweepItem& it = items[rng() % items.size()];
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (it.g.adjacent(u, v)) edges.emplace_back(u, v);
                }
            }
            const auto [eu, ev] = edges[rng() % edges.size()];
            std::vector<std::pair<int, int>> rest;
            for (const auto& e : edges) {
                if (e != std::make_pair(eu, ev)) rest.push_back(e);
            }
            const Graph del = Graph::from_edges(n, rest);
            if (!is_connected(del)) continue;
            ++done;
            const ExactSpectrum before = ExactSpectrum::from_char_poly(poly_from_string(it.poly_str));
            const ExactSpectrum after = dl_spectrum(del);
            bool ok = true;
            zip_expanded(after, before, [&](const auto& ea, const auto& eb) {
                if (!ok) return;
                if (ExactSpectrum::compare_entries(after, ea, before, eb) < 0) ok = false;
            });
            if (!ok) mono.fail(it.g6 + " minus (" + std::to_string(eu) + "," + std::to_string(ev) + ")");
        }
        rep.suites.push_back(std::move(mono));
    }

    // Lemma 2.1 (ii)-(iv) over all graphs, connected or not.
    if (n <= 6) {
        SuiteResult two{"lemma21ii-two-distinct-laplacian-eigenvalues"};
        SuiteResult comp{"lemma21iii-complement-rule"};
        const std::vector<Graph> all = all_graph_classes(n);
        for (const Graph& g : all) {
            const ExactSpectrum ls = laplacian_spectrum(g);
            const bool two_distinct = ls.distinct_count() == 2;
            bool is_union_of_same_cliques = true;
            int clique_order = 0;
            bool any_clique = false;
            for (const std::uint64_t mask : component_masks(g)) {
                std::vector<int> vs;
                for (std::uint64_t m = mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
                const int sz = static_cast<int>(vs.size());
                if (sz == 1) continue;
                const Graph c = induced_subgraph(g, vs);
                if (c.edge_count() != sz * (sz - 1) / 2) {
                    is_union_of_same_cliques = false;
                    break;
                }
                if (any_clique && sz != clique_order) {
                    is_union_of_same_cliques = false;
                    break;
                }
                any_clique = true;
                clique_order = sz;
            }
            const bool rhs = is_union_of_same_cliques && any_clique;
            if (two_distinct != rhs) two.fail(to_graph6(g));

            const ExactSpectrum via = complement_laplacian_spectrum(ls, n);
            const ExactSpectrum direct = laplacian_spectrum(complement(g));
            if (!(via == direct)) comp.fail(to_graph6(g));
        }
        rep.suites.push_back(std::move(two));
        rep.suites.push_back(std::move(comp));

        SuiteResult joinrule{"lemma21iv-join-rule"};
        for (int a = 1; a < n; ++a) {
            const int b = n - a;
            if (b < a) break;
            const std::vector<Graph> lhs = all_graph_classes(a);
            const std::vector<Graph> rhs_graphs = all_graph_classes(b);
            for (const Graph& ga : lhs) {
                for (const Graph& gb : rhs_graphs) {
                    const ExactSpectrum via = join_laplacian_spectrum(
                        laplacian_spectrum(ga), a, laplacian_spectrum(gb), b);
                    const ExactSpectrum direct = laplacian_spectrum(join(ga, gb));
                    if (!(via == direct)) {
                        joinrule.fail(to_graph6(ga) + " v " + to_graph6(gb));
                    }
                }
            }
        }
        rep.suites.push_back(std::move(joinrule));
    }

    // Lemma 2.2 equivalences, over all graphs connected or not.
    if (n <= 7) {
        SuiteResult iff{"lemma22-cograph-iff-p4-free"};
        for (const Graph& g : all_graph_classes(n)) {
            if (is_cograph(g) != is_p4_free(g)) iff.fail(to_graph6(g));
        }
        rep.suites.push_back(std::move(iff));
    }
    if (n <= 6) {
        SuiteResult diam2{"lemma22-cograph-iff-induced-diameter-2"};
        for (const Graph& g : all_graph_classes(n)) {
            bool all_small = true;
            const int nn = g.order();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nn) && all_small; ++mask) {
                std::vector<int> vs;
                for (std::uint64_t m = mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
                if (vs.size() < 2) continue;
                const Graph sub = induced_subgraph(g, vs);
                if (is_connected(sub) && diameter(sub) > 2) all_small = false;
            }
            if (is_cograph(g) != all_small) diam2.fail(to_graph6(g));
        }
        rep.suites.push_back(std::move(diam2));
    }

    // Lemma 3.4 and Lemma x-3-6: P5-free diameter-3 structure.
    if (n >= 5 && n <= 8) {
        SuiteResult l34{"lemma34-p5free-diam3-contains-some-Ii"};
        SuiteResult jstruct{"lemma-x36-jgraph-structure"};
        const Pattern is_i[] = {Pattern::I1, Pattern::I2, Pattern::I3, Pattern::I4, Pattern::I5};
        for (const auto& it : items) {
            if (!it.p5_free || it.diameter != 3) continue;
            bool any = false;
            for (const Pattern p : is_i) {
                if (contains_induced(it.g, p)) {
                    any = true;
                    break;
                }
            }
            if (!any) l34.fail(it.g6);
            const bool only_i3 = !contains_induced(it.g, Pattern::I1) &&
                                 !contains_induced(it.g, Pattern::I2) &&
                                 !contains_induced(it.g, Pattern::I4) &&
                                 !contains_induced(it.g, Pattern::I5);
            if (only_i3) {
                const auto shape = j_graph_recognize(it.g);
                if (!shape) {
                    jstruct.fail(it.g6);
                } else {
                    const Graph built = build({.family = Family::j_graph,
                                               .a = shape->a,
                                               .b = shape->b});
                    if (!isomorphic(it.g, built)) jstruct.fail(it.g6);
                }
            }
        }
        rep.suites.push_back(std::move(l34));
        rep.suites.push_back(std::move(jstruct));
    }

    // Class members: forbidden J patterns and the 5x5 double-eigenvalue tool.
    if (n >= 6 && n <= 9) {
        SuiteResult forbid{"lemma-x37-members-forbid-J1-J2-J3"};
        for (const auto& [spec, g] : classified_family_members(n)) {
            if (contains_induced(g, Pattern::J1) || contains_induced(g, Pattern::J2) ||
                contains_induced(g, Pattern::J3)) {
                forbid.fail(to_graph6(g));
            }
        }
        rep.suites.push_back(std::move(forbid));
    }
    if (n >= 6 && n <= 8) {
        SuiteResult l35{"lemma35-5x5-double-eigenvalue-exact"};
        SuiteResult l35num{"lemma35-5x5-double-eigenvalue-numeric"};
        for (const auto& [spec, g] : classified_family_members(n)) {
            const IntSymMatrix dl = distance_laplacian(g);
            const ExactSpectrum s = ExactSpectrum::of_matrix(dl);
            if (!s.largest().root.is_integer) {
                l35.fail(to_graph6(g));
                continue;
            }
            const mpz_class top = s.largest().root.value;
            std::vector<int> subset;
            auto all_subsets = [&](auto&& self, int start) -> void {
                if (subset.size() == 5) {
                    const IntSymMatrix sub = dl.principal_submatrix(subset);
                    const IntPoly cp = char_poly(sub);
                    const IntPoly lin{std::vector<mpz_class>{-top, mpz_class(1)}};
                    bool exact_ok = true;
                    try {
                        cp.divide_exact(lin).divide_exact(lin);
                    } catch (const InvalidArgument&) {
                        exact_ok = false;
                    }
                    if (!exact_ok) l35.fail(to_graph6(g));
                    int close = 0;
                    for (const double v : numeric_eigenvalues(sub)) {
                        if (std::abs(v - top.get_d()) <= 1e-7) ++close;
                    }
                    if (close < 2) l35num.fail(to_graph6(g));
                    return;
                }
                for (int v = start; v < n; ++v) {
                    subset.push_back(v);
                    self(self, v + 1);
                    subset.pop_back();
                }
            };
            all_subsets(all_subsets, 0);
        }
        rep.suites.push_back(std::move(l35));
        rep.suites.push_back(std::move(l35num));
    }

    // Numeric cross-checks.
    {
        SuiteResult inter{"interlacing-random-submatrices"};
        for (int t = 0; t < std::min(sample_budget, 200); ++t) {
            const SweepItem& it = items[rng() % items.size()];
            const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            std::vector<int> all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(static_cast<std::size_t>(m));
            if (!interlacing_check(it.g, all)) inter.fail(it.g6);
        }
        rep.suites.push_back(std::move(inter));
    }
    if (n <= 8) {
        SuiteResult agree{"numeric-exact-agreement"};
        for (const auto& it : items) {
            const ExactSpectrum s = ExactSpectrum::from_char_poly(poly_from_string(it.poly_str));
            const IntSymMatrix dl = distance_laplacian(it.g);
            const std::vector<double> numeric = numeric_eigenvalues(dl);
            const std::vector<double> exact = s.approx_descending();
            const double tol = 1e-8 * (1.0 + n * dl.max_abs_entry().get_d());
            for (std::size_t i = 0; i < numeric.size(); ++i) {
                if (std::abs(numeric[i] - exact[i]) > tol) {
                    agree.fail(it.g6);
                    break;
                }
            }
        }
        rep.suites.push_back(std::move(agree));
    }

    return rep;
}

PropertyReport formulas_check(int max_n) {
    if (max_n < 6) throw InvalidArgument("formula checks start at n = 6");
    PropertyReport rep;
    rep.n = max_n;

    SuiteResult match{"family-formula-vs-computed"};
    SuiteResult structure{"family-member-structure"};
    SuiteResult multiplicity{"family-largest-multiplicity-n-minus-3"};
    SuiteResult distinct{"family-formula-pairwise-distinct"};
    SuiteResult split{"family-h1-h2-distinct-counts"};
    SuiteResult placement{"family-edge-placement-invariance"};
    SuiteResult jtrans{"jgraph-transmission-formulas"};

    for (int n = 6; n <= max_n; ++n) {
        std::vector<std::string> keys;
        for (const auto& [spec, g] : classified_family_members(n)) {
            const ExactSpectrum computed = dl_spectrum(g);
            const ExactSpectrum formula = closed_form_dl_spectrum(spec);
            const std::string label = family_name(spec.family) + " n=" + std::to_string(n);
            if (!(computed == formula)) match.fail(label);
            rep.count += 1;
            keys.push_back(formula.key());

            if (!is_connected(g) || !is_p5_free(g) || diameter(g) != 2 ||
                connected_component_count(complement(g)) < 2) {
                structure.fail(label);
            }
            if (computed.largest().multiplicity != n - 3 || !computed.largest().root.is_integer) {
                multiplicity.fail(label);
            }
            const bool h1 = spec.family == Family::complete_multipartite ||
                            spec.family == Family::balanced_bipartite_plus_edge ||
                            spec.family == Family::star_plus_edge;
            if (computed.distinct_count() != (h1 ? 4 : 3)) split.fail(label);
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
            distinct.fail("n=" + std::to_string(n));
        }

        // Any admissible placement of the extra edge yields the same spectrum.
        {
            std::vector<std::pair<int, int>> star_edges;
            for (int v = 1; v < n; ++v) star_edges.emplace_back(0, v);
            const std::string base = spectrum_key(
                build({.family = Family::star_plus_edge, .n = n}));
            for (int u = 1; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    auto e = star_edges;
                    e.emplace_back(u, v);
                    if (spectrum_key(Graph::from_edges(n, e)) != base) {
                        placement.fail("star-plus-edge n=" + std::to_string(n));
                    }
                }
            }
        }
        if (n % 2 == 0) {
            const Graph bip = build({.family = Family::complete_multipartite,
                                     .n = n,
                                     .parts = {n / 2, n / 2}});
            std::vector<std::pair<int, int>> bip_edges;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (bip.adjacent(u, v)) bip_edges.emplace_back(u, v);
                }
            }
            const std::string base = spectrum_key(
                build({.family = Family::balanced_bipartite_plus_edge, .n = n}));
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (bip.adjacent(u, v)) continue;
                    auto e = bip_edges;
                    e.emplace_back(u, v);
                    if (spectrum_key(Graph::from_edges(n, e)) != base) {
                        placement.fail("balanced-bipartite-plus-edge n=" + std::to_string(n));
                    }
                }
            }
        }
    }

    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= a; ++b) {
            const Graph j = build({.family = Family::j_graph, .a = a, .b = b});
            const auto tr = transmissions(j);
            const std::string label = "J(" + std::to_string(a) + "," + std::to_string(b) + ")";
            // Layout: root_a = 0, a-side = 1..a, root_b = a+1, b-side = rest.
            bool ok = tr[0] == a + 2 * b + 3 && tr[static_cast<std::size_t>(a) + 1] == 2 * a + b + 3;
            for (int x = 1; x <= a && ok; ++x) ok = tr[static_cast<std::size_t>(x)] == 2 * a + b + 1;
            for (int y = a + 2; y < j.order() && ok; ++y) {
                ok = tr[static_cast<std::size_t>(y)] == a + 2 * b + 1;
            }
            if (!ok) jtrans.fail(label);
        }
    }

    rep.suites = {match, structure, multiplicity, distinct, split, placement, jtrans};
    return rep;
}

} // namespace dlm
