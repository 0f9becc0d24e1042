#include "lapctl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>

#include "lapctl/compose.hpp"
#include "lapctl/controllability.hpp"
#include "lapctl/spectral.hpp"

namespace lapctl::verify {

std::vector<CaseResult> run_cases(const std::vector<Case>& cases, Schedule schedule) {
  std::vector<CaseResult> out(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = cases[i]();
    } catch (const std::exception& ex) {
      out[i] = CaseResult{"case#" + std::to_string(i), false,
                          std::string("exception: ") + ex.what()};
    }
  };
  if (schedule == Schedule::Serial) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    return out;
  }
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  return out;
}

namespace {

std::string bits_string(const std::vector<int>& b) {
  std::string s;
  for (int x : b) s += x ? '1' : '0';
  return s;
}

std::string links_string(const std::vector<Link>& links) {
  std::string s;
  for (auto l : links) s += l == Link::Dominating ? 'D' : 'T';
  return s.empty() ? "-" : s;
}

// Every D/T assignment of length len, in lexicographic D<T order.
std::vector<std::vector<Link>> all_links(std::size_t len) {
  std::vector<std::vector<Link>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    std::vector<Link> links(len);
    for (std::size_t i = 0; i < len; ++i)
      links[i] = (mask >> (len - 1 - i)) & 1 ? Link::Terminal : Link::Dominating;
    out.push_back(std::move(links));
  }
  return out;
}

bool exact_controllable(const Graph& g, const std::vector<int>& b) {
  return kalman_rank_exact(laplacian(g), ControlMatrix::from_vector(b)) == g.order();
}

bool exact_controllable(const Graph& g, Vertex v) {
  return kalman_rank_exact(laplacian(g), ControlMatrix::unit(g.order(), v)) == g.order();
}

double min_gap(const std::vector<double>& values) {
  double gap = INFINITY;
  for (std::size_t i = 1; i < values.size(); ++i)
    gap = std::min(gap, values[i] - values[i - 1]);
  return gap;
}

// Spectrum simple and the given 0-based entries nonzero in every eigenvector.
CaseResult simple_with_nonzero(std::string name, const Graph& g,
                               const std::vector<std::size_t>& entries) {
  const auto dec = eig_sym(laplacian(g));
  const double gap = min_gap(dec.values);
  std::ostringstream detail;
  bool pass = gap > kSimpleGap;
  detail << "min_gap=" << gap;
  for (std::size_t j = 0; j < dec.modal.cols() && pass; ++j) {
    const auto v = dec.modal.column(j);
    for (auto e : entries)
      if (is_zero_entry(v, e)) {
        pass = false;
        detail << " zero entry " << e + 1 << " in eigenvector " << j + 1
               << " (lambda=" << dec.values[j] << ")";
        break;
      }
  }
  return {std::move(name), pass, detail.str()};
}

}  // namespace

std::vector<NamedGraph> composite_sweep_family() {
  std::vector<NamedGraph> out;
  for (std::size_t k = 2; k <= 5; ++k) {
    out.push_back({"P" + std::to_string(k), gen_path(k)});
    out.push_back({"AR" + std::to_string(k), gen_antiregular(k)});
    out.push_back({"K" + std::to_string(k), gen_complete(k)});
  }
  return out;
}

std::vector<Case> composite_cases() {
  const auto family = composite_sweep_family();
  // Precompute which vertices of each family member are controlling.
  std::vector<std::vector<Vertex>> ctrl;
  for (const auto& f : family) ctrl.push_back(controllable_vertices(f.graph));

  std::vector<Case> cases;
  for (std::size_t si = 0; si < family.size(); ++si) {
    for (std::size_t ci = 0; ci < family.size(); ++ci) {
      for (Vertex s : ctrl[ci]) {
        const CompositeSpec spec{family[si].graph, family[ci].graph, s};
        const std::string tag =
            family[si].name + "/" + family[ci].name + " s=" + std::to_string(s);
        for (Vertex w = 1; w <= spec.structure.order(); ++w) {
          cases.push_back([spec, tag, w] {
            const auto pred = predict_composite(spec, w);
            const bool actual = exact_controllable(composite(spec), pred.input_vertex);
            std::ostringstream d;
            d << "predicted=" << pred.controllable << " exact=" << actual
              << " input=" << pred.input_vertex;
            return CaseResult{"composite-ctrl " + tag + " w=" + std::to_string(w),
                              pred.controllable == actual, d.str()};
          });
        }
        // Simplicity needs at least one controlling structure vertex.
        if (ctrl[si].empty()) continue;
        const auto positions = ctrl[si];
        cases.push_back([spec, tag, positions] {
          std::vector<std::size_t> entries;
          for (Vertex w : positions) entries.push_back(spec.composite_vertex(w) - 1);
          return simple_with_nonzero("composite-simple " + tag, composite(spec), entries);
        });
      }
    }
  }
  return cases;
}

std::vector<Case> cj_cases(std::size_t max_path) {
  std::vector<Case> cases;
  for (std::size_t k = 1; k <= max_path; ++k)
    for (Vertex v = 1; v <= k; ++v)
      cases.push_back([k, v] {
        const bool pred = path_split_controllable(v - 1, k - v);
        const bool actual = exact_controllable(gen_path(k), v);
        std::ostringstream d;
        d << "split=(" << v - 1 << "," << k - v << ") predicted=" << pred
          << " exact=" << actual;
        return CaseResult{"cj P" + std::to_string(k) + " v=" + std::to_string(v),
                          pred == actual, d.str()};
      });
  return cases;
}

std::vector<Case> chain_cases() {
  std::vector<Case> cases;
  for (std::size_t c : {2, 3})
    for (std::size_t k2 = 2; k2 <= 5; ++k2)
      for (const auto& links : all_links(c - 1)) {
        const ChainSpec spec{c, k2, links, 0, std::nullopt};
        const bool terminal = links.front() == Link::Terminal;
        for (std::size_t mask = 1; mask < (std::size_t{1} << k2); ++mask) {
          std::vector<int> b(spec.block_order(), 0);
          for (std::size_t i = 0; i < k2; ++i) b[i] = (mask >> (k2 - 1 - i)) & 1;
          if (terminal && b[k2 - 1]) continue;
          cases.push_back([spec, b] {
            const bool pred = valid_chain_input(spec, b);
            const bool actual = exact_controllable(chain_antiregular(spec), b);
            std::ostringstream d;
            d << "predicted=" << pred << " exact=" << actual;
            return CaseResult{"chain c=" + std::to_string(spec.c) + " k2=" +
                                  std::to_string(spec.k2) + " links=" +
                                  links_string(spec.links) + " b=" +
                                  bits_string({b.begin(), b.begin() + spec.k2}),
                              pred == actual, d.str()};
          });
        }
      }
  return cases;
}

std::vector<Case> chain_entry_cases() {
  std::vector<Case> cases;
  for (std::size_t c = 1; c <= 4; ++c)
    for (std::size_t k2 = 2; k2 <= 5; ++k2)
      for (const auto& links : all_links(c - 1)) {
        const ChainSpec spec{c, k2, links, 0, std::nullopt};
        cases.push_back([spec] {
          const std::size_t kb = spec.kappa();
          return simple_with_nonzero("chain-entries c=" + std::to_string(spec.c) + " k2=" +
                                         std::to_string(spec.k2) + " links=" +
                                         links_string(spec.links),
                                     chain_antiregular(spec), {kb - 1, kb});
        });
      }
  return cases;
}

std::vector<Case> append_path_cases() {
  std::vector<NamedGraph> bases;
  for (std::size_t k = 2; k <= 7; ++k)
    bases.push_back({"AR" + std::to_string(k), gen_antiregular(k)});
  for (std::size_t c : {2, 3})
    for (std::size_t k2 = 2; k2 <= 5; ++k2)
      for (const auto& links : all_links(c - 1))
        bases.push_back({"chain(c=" + std::to_string(c) + ",k2=" + std::to_string(k2) +
                             "," + links_string(links) + ")",
                         chain_antiregular(ChainSpec{c, k2, links, 0, std::nullopt})});

  std::vector<Case> cases;
  for (const auto& base : bases) {
    const auto dec = eig_sym(laplacian(base.graph));
    if (min_gap(dec.values) <= kSimpleGap) continue;
    for (Vertex v = 1; v <= base.graph.order(); ++v) {
      bool all_nonzero = true;
      for (std::size_t j = 0; j < dec.modal.cols() && all_nonzero; ++j)
        all_nonzero = !is_zero_entry(dec.modal.column(j), v - 1);
      if (!all_nonzero) continue;
      for (std::size_t m = 1; m <= 5; ++m) {
        const std::string name =
            "append-path " + base.name + " v=" + std::to_string(v) + " m=" + std::to_string(m);
        const Graph g = base.graph;
        cases.push_back([name, g, v, m] {
          const Graph grown = append_path(g, v, m);
          return simple_with_nonzero(name, grown, {grown.order() - 1});
        });
      }
    }
  }
  return cases;
}

std::vector<Case> majorization_cases(const MajorizationOptions& opt) {
  if (opt.maxk < 2) throw InvalidArgument("majorization sweep needs maxk >= 2");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> order(2, opt.maxk);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  std::vector<Case> cases;
  for (std::size_t i = 0; i < opt.random; ++i) {
    const std::size_t n = order(rng);
    const double p = density(rng);
    Graph g = gen_random_connected(n, p, rng);
    cases.push_back([i, g] {
      const auto dec = eig_sym(laplacian(g));
      const auto dstar = conjugate(degree_sequence(g));
      const bool ok = check_majorization(dec.values, dstar);
      return CaseResult{"majorization #" + std::to_string(i) + " n=" +
                            std::to_string(g.order()) + " m=" + std::to_string(g.size()),
                        ok, ok ? "holds" : "violated"};
    });
  }
  return cases;
}

std::vector<Case> example_cases() {
  std::vector<Case> cases;
  cases.push_back([] {
    const CompositeSpec spec{gen_antiregular(7), gen_antiregular(5), 3};
    const Vertex w = 4;  // degree-repeating vertex of AR(7)
    const auto pred = predict_composite(spec, w);
    const bool actual = exact_controllable(composite(spec), pred.input_vertex);
    std::ostringstream d;
    d << "35-vertex composite, input " << pred.input_vertex << ": exact=" << actual
      << " predicted=" << pred.controllable;
    return CaseResult{"example composite AR7(AR5, s=3) w=4", actual && pred.controllable,
                      d.str()};
  });
  // Panel (c): five AR(5) blocks, 4-vertex path at block 1's vertex 3. The
  // drawing does not pin the junction types, so every mix is checked.
  for (const auto& links : all_links(4)) {
    cases.push_back([links] {
      const ChainSpec bare{5, 5, links, 0, std::nullopt};
      const ChainSpec tailed{5, 5, links, 4, std::nullopt};
      const Graph g0 = chain_antiregular(bare), g1 = chain_antiregular(tailed);
      std::vector<std::string> good;
      for (std::size_t mask = 1; mask < 32; ++mask) {
        std::vector<int> b(25, 0);
        for (std::size_t i = 0; i < 5; ++i) b[i] = (mask >> (4 - i)) & 1;
        if (!valid_chain_input(bare, b)) continue;
        std::vector<int> bt = b;
        bt.resize(29, 0);
        if (exact_controllable(g0, b) && exact_controllable(g1, bt))
          good.push_back(bits_string({b.begin(), b.begin() + 5}));
      }
      std::ostringstream d;
      d << good.size() << " certified inputs controllable with and without tail";
      for (const auto& s : good) d << ' ' << s;
      return CaseResult{"example chain 5xAR5 links=" + links_string(links) + " tail=4",
                        !good.empty(), d.str()};
    });
  }
  return cases;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "composite", "cj", "chain", "lemma6", "lemma7", "majorization", "figure1"};
  return names;
}

std::vector<Case> suite_cases(std::string_view suite, const MajorizationOptions& opt) {
  if (suite == "composite") return composite_cases();
  if (suite == "cj") return cj_cases();
  if (suite == "chain") return chain_cases();
  if (suite == "lemma6") return chain_entry_cases();
  if (suite == "lemma7") return append_path_cases();
  if (suite == "majorization") return majorization_cases(opt);
  if (suite == "figure1") return example_cases();
  throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace lapctl::verify
