// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/field.hpp"
#include "factorcomplex/freegroup.hpp"
#include "factorcomplex/homology.hpp"
#include "factorcomplex/poset.hpp"
#include "factorcomplex/spheres.hpp"
#include "oracles.hpp"

using namespace fcx;

namespace {

using Betti = std::vector<long long>;

// Every complex goes through the self-checking report; these count the runs.
int self_checked_runs = 0;
int torsion_free_runs = 0;
int modular_agreements = 0;

HomologyReport checked_report(const SimplicialComplex& k) {
  auto r = homology_report(k);
  ++self_checked_runs;
  bool torsion_free = true;
  for (const auto& t : r.torsion) torsion_free = torsion_free && t.empty();
  if (torsion_free) {
    ++torsion_free_runs;
    HomologyOptions mod2;
    mod2.coefficients = Coefficients::prime(2);
    mod2.compute_torsion = false;
    if (homology_report(k, mod2).betti == r.betti) ++modular_agreements;
  }
  return r;
}

std::string show(const Betti& b) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < b.size(); ++i) s << (i ? "," : "") << b[i];
  return s.str() + "]";
}

Betti trimmed(Betti b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

bool no_torsion(const HomologyReport& r) {
  for (const auto& t : r.torsion) {
    if (!t.empty()) return false;
  }
  return true;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    out.pass = false;
    out.detail += "; over time limit";
  }
  if (!out.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2fs, limit %.0fs) %s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              limit_seconds, out.detail.c_str());
  std::fflush(stdout);
}

// Inputs shared by several criteria.
Word random_word(std::mt19937_64& rng, int n, int max_len) {
  Word w;
  const int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % n);
    w.push_back(rng() % 2 ? g : -g);
  }
  return oracle::reduce(w);
}

}  // namespace

int main() {
  criterion(1, "field CB(2,2) and CB(2,3) are wedges of circles", 1.0, [] {
    std::string detail;
    bool ok = true;
    for (auto [q, expect] : std::vector<std::pair<int, Betti>>{{2, {0, 1}}, {3, {0, 3}}}) {
      const auto k = build_CB(2, q);
      const auto r = checked_report(k);
      const auto dense = oracle::reduced_betti(k);
      ok = ok && r.betti == expect && dense == expect && no_torsion(r);
      detail += "q=" + std::to_string(q) + " " + show(r.betti) + " oracle " + show(dense) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(2, "field CB(3,2) has homology only in degree 3, free of rank 8", 300.0, [] {
    const auto k = build_CB(3, 2);
    const auto r = checked_report(k);
    const Betti expect{0, 0, 0, 8, 0, 0};
    long long reduced_euler = -1;
    for (std::size_t d = 0; d < r.face_counts.size(); ++d) {
      reduced_euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r.face_counts[d]);
    }
    const bool ok = r.betti == expect && no_torsion(r) && reduced_euler == -r.betti[3];
    return Outcome{ok, "betti " + show(r.betti) + ", reduced Euler " + std::to_string(reduced_euler) +
                           (no_torsion(r) ? ", torsion-free" : ", torsion present")};
  });

  criterion(3, "order complexes of PD and FCD match CB", 600.0, [] {
    std::string detail;
    bool ok = true;
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
      const auto cb = trimmed(checked_report(build_CB(n, q)).betti);
      const auto pd = trimmed(checked_report(order_complex(*build_PD(n, q).poset)).betti);
      const auto fcd = trimmed(checked_report(order_complex(*build_FCD(n, q).poset)).betti);
      ok = ok && cb == pd && cb == fcd && !cb.empty();
      detail += "(" + std::to_string(n) + "," + std::to_string(q) + ") CB " + show(cb) + " PD " + show(pd) + " FCD " +
                show(fcd) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(4, "phi is order-preserving with acyclic lower fibers", 900.0, [] {
    std::string detail;
    bool ok = true;
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
      const auto phi = phi_map(n, q);
      const bool op = is_order_preserving(phi.map);
      const auto report = check_quillen_fibers(phi.map);
      std::size_t failing = 0;
      for (const auto& f : report.fibers) failing += f.pass ? 0 : 1;
      ok = ok && op && report.all_pass && !report.fibers.empty();
      detail += "(" + std::to_string(n) + "," + std::to_string(q) + ") " + std::to_string(phi.chains.size()) +
                " chains, " + std::to_string(report.fibers.size()) + " fibers, " + std::to_string(failing) +
                " failing; ";
    }
    return Outcome{ok, detail};
  });

  criterion(5, "sphere-system lemma suite for n <= 4, up to 8 edges", 1800.0, [] {
    std::string detail;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      const auto r = verify_all(n, 8);
      std::size_t total = 0;
      for (const auto& [name, count] : r.checked) total += count;
      ok = ok && r.violations.empty() && r.checked.size() == 5;
      detail += "n=" + std::to_string(n) + " graphs " + std::to_string(r.graphs) + " checked " +
                std::to_string(total) + " violations " + std::to_string(r.violations.size()) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(6, "free-group decisions agree with brute-force oracles", 300.0, [] {
    const auto orbit = oracle::primitive_orbit_f2(6, 10);
    std::size_t words = 0, disagreements = 0, primitive = 0;
    std::vector<Word> layer{{}};
    for (int len = 1; len <= 6; ++len) {
      std::vector<Word> next;
      for (const auto& w : layer) {
        for (int l : {1, -1, 2, -2}) {
          if (!w.empty() && w.back() == -l) continue;
          Word x = w;
          x.push_back(l);
          const bool expect = orbit.count(x) != 0;
          primitive += expect;
          disagreements += is_primitive(x, 2) != expect;
          ++words;
          next.push_back(std::move(x));
        }
      }
      layer = std::move(next);
    }
    std::mt19937_64 rng(6);
    std::size_t membership_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Word> gens;
      const int k = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < k; ++i) {
        Word g;
        do g = random_word(rng, 2, 3);
        while (g.empty());
        gens.push_back(g);
      }
      const auto h = fold(2, gens);
      const auto products = oracle::bounded_products(gens, 7);
      Word inside;
      for (int f = 0; f < 1 + static_cast<int>(rng() % 4); ++f) {
        const auto& g = gens[rng() % gens.size()];
        inside = oracle::mul(inside, rng() % 2 ? g : oracle::invert(g));
      }
      const Word q = random_word(rng, 2, 6);
      // Negative answers are checked against products of up to 7 factors,
      // positive ones are searched for up to 12 factors.
      const bool agrees = h.contains(q) ? oracle::in_bounded_products(gens, q, 12) : products.count(q) == 0;
      if (!h.contains(inside) || !agrees) ++membership_bad;
    }
    return Outcome{disagreements == 0 && membership_bad == 0,
                   std::to_string(words) + " words, " + std::to_string(primitive) + " primitive, " +
                       std::to_string(disagreements) + " disagreements; 200 membership cases, " +
                       std::to_string(membership_bad) + " disagreements"};
  });

  criterion(7, "truncated CB(F_2) is connected for L = 1..4", 120.0, [] {
    std::string detail;
    bool ok = true;
    for (int L = 1; L <= 4; ++L) {
      const auto cb = build_truncated_CB(2, L);
      const auto r = checked_report(cb.complex);
      ok = ok && !r.betti.empty() && r.betti[0] == 0;
      detail += "L=" + std::to_string(L) + " vertices " + std::to_string(cb.factors.size()) + " b0 " +
                std::to_string(r.betti.empty() ? -1 : r.betti[0]) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(8, "engine self-checks are enforced", 60.0, [] {
    bool breach = false;
    bool witness = false;
    try {
      const auto d1 = SparseMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
      const auto d2 = SparseMatrix::from_dense({{1}, {1}, {1}});
      ChainComplex({3, 3, 1}, {d1, d2});
    } catch (const InvariantBreach& e) {
      breach = true;
      witness = !e.witness().empty();
    }
    const bool ok = breach && witness && self_checked_runs > 0 && modular_agreements == torsion_free_runs;
    return Outcome{ok, "non-zero composite rejected: " + std::string(breach ? "yes" : "no") + ", witness: " +
                           (witness ? "yes" : "no") + "; " + std::to_string(self_checked_runs) +
                           " self-checked runs, mod-2 agreement on " + std::to_string(modular_agreements) + "/" +
                           std::to_string(torsion_free_runs) + " torsion-free complexes"};
  });

  return failures == 0 ? 0 : 1;
}
