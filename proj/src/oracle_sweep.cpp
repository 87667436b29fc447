#include "toral/oracle_sweep.hpp"

#include <numeric>
#include <sstream>

#include "toral/error.hpp"

namespace toral {

namespace {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
  std::vector<int> generators;
};

// Catalog groups of order <= bound: the cyclic groups (split / sign /
// norm_one_cyclic / weil_restriction tables) plus the Weyl and dihedral
// groups when they fit.
std::vector<NamedGroup> catalog_groups(int bound) {
  std::vector<NamedGroup> out;
  for (int k = 1; k <= bound; ++k) {
    FiniteGroup g = FiniteGroup::cyclic(static_cast<std::size_t>(k));
    std::vector<int> gens = k == 1 ? std::vector<int>{0} : std::vector<int>{1};
    out.push_back({"C" + std::to_string(k), std::move(g), std::move(gens)});
  }
  auto add_matrix_group = [&](const char* name, const GaloisLattice& x) {
    if (x.group().order() > static_cast<std::size_t>(bound)) return;
    // Deterministic two-element generating set.
    const FiniteGroup& g = x.group();
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = a; b < g.order(); ++b) {
        std::vector<int> gens{static_cast<int>(a), static_cast<int>(b)};
        if (g.generated_subgroup(gens).size() == g.order()) {
          out.push_back({name, g, std::move(gens)});
          return;
        }
      }
  };
  add_matrix_group("S3", preset("a2_weyl"));
  add_matrix_group("D8", preset("dihedral_plane"));
  return out;
}

long det_mod(const std::vector<long>& mat, std::size_t r, long m) {
  if (r == 1) return ((mat[0] % m) + m) % m;
  if (r == 2) {
    long d = mat[0] * mat[3] - mat[1] * mat[2];
    return ((d % m) + m) % m;
  }
  IntMatrix a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a.at(i, j) = mat[i * r + j];
  Int d = a.determinant() % m;
  if (d < 0) d += m;
  return d.get_si();
}

std::vector<long> mat_mult_mod(const std::vector<long>& a, const std::vector<long>& b,
                               std::size_t r, long m) {
  std::vector<long> c(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (a[i * r + k] == 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        c[i * r + j] = (c[i * r + j] + a[i * r + k] * b[k * r + j]) % m;
    }
  return c;
}

bool is_identity_mod(const std::vector<long>& a, std::size_t r, long m) {
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long want = i == j ? 1 % m : 0;
      if (((a[i * r + j] % m) + m) % m != want) return false;
    }
  return true;
}

// All module structures on (Z/m)^r over the group: assignments of matrices to
// the generators that extend to a homomorphism on the whole table.
std::vector<std::vector<std::vector<long>>> module_structures(const NamedGroup& g,
                                                              std::size_t r, long m) {
  const std::size_t order = g.group.order();
  // BFS words for all elements in terms of the generators.
  std::vector<int> parent(order, -1), via(order, -1);
  std::vector<int> bfs{g.group.identity()};
  {
    std::vector<bool> seen(order, false);
    seen[g.group.identity()] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head)
      for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
        int next = g.group.mult(bfs[head], g.generators[gi]);
        if (!seen[next]) {
          seen[next] = true;
          parent[next] = bfs[head];
          via[next] = static_cast<int>(gi);
          bfs.push_back(next);
        }
      }
  }

  // Candidate matrices per generator, pruned by the generator's order.
  std::size_t entries = r * r;
  std::size_t total = 1;
  for (std::size_t i = 0; i < entries; ++i) total *= static_cast<std::size_t>(m);
  std::vector<std::vector<std::vector<long>>> per_gen(g.generators.size());
  for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
    int gen_order = g.group.element_order(g.generators[gi]);
    std::vector<long> mat(entries, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t v = idx;
      for (std::size_t e = 0; e < entries; ++e) {
        mat[e] = static_cast<long>(v % m);
        v /= static_cast<std::size_t>(m);
      }
      if (std::gcd(det_mod(mat, r, m), m) != 1) continue;
      std::vector<long> pw = mat;
      for (int p = 1; p < gen_order; ++p) pw = mat_mult_mod(pw, mat, r, m);
      if (is_identity_mod(pw, r, m)) per_gen[gi].push_back(mat);
    }
  }

  std::vector<std::vector<std::vector<long>>> modules;
  std::vector<std::size_t> choice(g.generators.size(), 0);
  for (;;) {
    // Extend the assignment along the BFS words and verify the full table.
    std::vector<std::vector<long>> mats(order);
    mats[g.group.identity()] = std::vector<long>(entries, 0);
    for (std::size_t i = 0; i < r; ++i) mats[g.group.identity()][i * r + i] = 1 % m;
    for (std::size_t b = 1; b < bfs.size(); ++b) {
      int e = bfs[b];
      mats[e] = mat_mult_mod(mats[parent[e]], per_gen[via[e]][choice[via[e]]], r, m);
    }
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        std::vector<long> prod = mat_mult_mod(mats[a], mats[b], r, m);
        if (prod != mats[g.group.mult(static_cast<int>(a), static_cast<int>(b))]) {
          ok = false;
          break;
        }
      }
    if (ok) modules.push_back(mats);

    std::size_t gi = 0;
    for (; gi < g.generators.size(); ++gi) {
      if (++choice[gi] < per_gen[gi].size()) break;
      choice[gi] = 0;
    }
    if (gi == g.generators.size() || per_gen[gi].empty()) break;
  }
  return modules;
}

EnumeratedModule to_enumerated(const NamedGroup& g, std::size_t r, long m,
                               const std::vector<std::vector<long>>& mats) {
  EnumeratedModule em;
  em.group = g.group;
  em.modulus = m;
  em.ambient_rank = r;
  em.action = mats;
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(m);
  std::vector<long> x(r, 0);
  em.elements.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    em.elements.push_back(x);
    for (std::size_t i = 0; i < r; ++i) {
      if (++x[i] < m) break;
      x[i] = 0;
    }
  }
  return em;
}

CoefficientModule to_coefficients(const NamedGroup& g, std::size_t r,
                                  const std::vector<std::vector<long>>& mats, long m) {
  std::vector<IntMatrix> action;
  action.reserve(mats.size());
  for (const auto& mat : mats) {
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a.at(i, j) = mat[i * r + j];
    action.push_back(std::move(a));
  }
  return CoefficientModule::finite_kind_mod(g.group, std::move(action), Int(m));
}

}  // namespace

SweepSummary run_enumeration_sweep(const SweepOptions& options) {
  SweepSummary summary;
  Int budget = enumeration_budget();

  auto run_case = [&](const std::string& label, const NamedGroup& g, std::size_t r,
                      long m, const std::vector<std::vector<long>>& mats, int n,
                      bool fault) {
    std::ostringstream lbl;
    lbl << label << " H^" << n;
    Int module_size = 1;
    for (std::size_t i = 0; i < r; ++i) module_size *= m;
    Int candidates = 1;
    std::size_t tuples = tuple_count(g.group.order(), n);
    for (std::size_t t = 0; t < tuples; ++t) candidates *= module_size;
    if (candidates > budget) {
      summary.cases.push_back(
          {SweepCase{lbl.str(), SweepCase::Status::skipped_budget, "over budget"}});
      ++summary.skipped;
      return;
    }
    try {
      CoefficientModule coeff = to_coefficients(g, r, mats, m);
      FinGenAbGroup bar = cohomology_group(g.group, coeff, n).group;
      EnumeratedModule em = to_enumerated(g, r, m, mats);
      em.wrong_sign_fault = fault;
      FinGenAbGroup brute = enumerate_cohomology(em, n).group;
      bool ok = bar == brute;
      std::string detail = "bar " + bar.to_string() + " vs enumeration " + brute.to_string();
      if (ok && g.group.is_cyclic()) {
        FinGenAbGroup tate = cyclic_oracle(g.group, *g.group.cyclic_generator(), coeff, n);
        ok = bar == tate;
        if (!ok) detail = "bar " + bar.to_string() + " vs cyclic " + tate.to_string();
      }
      summary.cases.push_back(SweepCase{
          lbl.str(), ok ? SweepCase::Status::ok : SweepCase::Status::mismatch, detail});
      ++summary.performed;
      if (!ok) ++summary.mismatches;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::budget_exceeded) {
        summary.cases.push_back(
            SweepCase{lbl.str(), SweepCase::Status::skipped_budget, e.what()});
        ++summary.skipped;
      } else {
        summary.cases.push_back(SweepCase{lbl.str(), SweepCase::Status::mismatch, e.what()});
        ++summary.performed;
        ++summary.mismatches;
      }
    }
  };

  if (options.inject_fault) {
    // Dedicated self-test: the trivial C3-action on Z/3 must surface the
    // corrupted coboundary sign as a mismatch.
    NamedGroup c3{"C3", FiniteGroup::cyclic(3), {1}};
    std::vector<std::vector<long>> mats(3, std::vector<long>{1});
    run_case("fault-hook C3 m=3 r=1 trivial", c3, 1, 3, mats, 1, true);
  }

  for (const NamedGroup& g : catalog_groups(options.max_group_order)) {
    for (long m = 2; m <= options.max_modulus; ++m) {
      for (int r = 1; r <= options.max_rank; ++r) {
        auto modules = module_structures(g, static_cast<std::size_t>(r), m);
        for (std::size_t mi = 0; mi < modules.size(); ++mi) {
          std::ostringstream label;
          label << g.name << " m=" << m << " r=" << r << " module#" << mi;
          for (int n = 1; n <= 2; ++n)
            run_case(label.str(), g, static_cast<std::size_t>(r), m, modules[mi], n,
                     false);
        }
      }
    }
  }
  return summary;
}

SweepSummary run_cyclic_sweep(int max_order) {
  SweepSummary summary;
  auto compare = [&](const std::string& label, const GaloisLattice& x) {
    int gen = *x.group().cyclic_generator();
    CoefficientModule m = CoefficientModule::lattice_kind(x);
    for (int n = 1; n <= 2; ++n) {
      std::string lbl = label + " H^" + std::to_string(n);
      try {
        FinGenAbGroup bar = cohomology_group(x.group(), m, n).group;
        FinGenAbGroup tate = cyclic_oracle(x.group(), gen, m, n);
        bool ok = bar == tate;
        summary.cases.push_back(
            SweepCase{lbl, ok ? SweepCase::Status::ok : SweepCase::Status::mismatch,
                      "bar " + bar.to_string() + " vs cyclic " + tate.to_string()});
        ++summary.performed;
        if (!ok) ++summary.mismatches;
      } catch (const Error& e) {
        summary.cases.push_back(SweepCase{lbl, SweepCase::Status::mismatch, e.what()});
        ++summary.performed;
        ++summary.mismatches;
      }
    }
  };

  compare("split(2)", preset("split", 2));
  for (int k = 2; k <= max_order; ++k) {
    if (k == 2) compare("sign", preset("sign"));
    compare("norm_one_cyclic(" + std::to_string(k) + ")", preset("norm_one_cyclic", k));
    compare("weil_restriction(" + std::to_string(k) + ")", preset("weil_restriction", k));
  }
  return summary;
}

}  // namespace toral
