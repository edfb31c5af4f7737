// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "opensets/adversary.hpp"
#include "opensets/baire.hpp"
#include "opensets/enumeration.hpp"
#include "opensets/heine_borel.hpp"
#include "opensets/representations.hpp"
#include "opensets/setexpr.hpp"
#include "opensets/urysohn_tietze.hpp"
#include "support.hpp"

using namespace opensets;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) notes << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double t = seconds_since(start);
  if (!c.ok) ++failures;
  std::printf("%s criterion %d: %s [%.3fs] %s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), t, c.notes.str().c_str());
  std::fflush(stdout);
}

bool prefix_contains(const std::vector<RatInterval>& prefix, const Rational& x) {
  for (const auto& e : prefix) {
    if (e.contains(x)) return true;
  }
  return false;
}

// The ◁-maximal attempt, found by a linear scan independent of the library's helper.
const Attempt& top_of(const std::vector<Attempt>& attempts, std::size_t count) {
  const Attempt* best = &attempts[0];
  for (std::size_t i = 1; i < count; ++i) {
    if (attempt_before(*best, attempts[i])) best = &attempts[i];
  }
  return *best;
}

void criterion1(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const FinClosed d({RatInterval::closed(Rational(1, 3), Rational(2, 3))});
  const OpenR4 cover{[](std::size_t n) { return RatInterval::open(Rational(1, static_cast<long>(n) + 2), Rational(1)); }};
  const auto cert = hbc_rm(ClosedRM::from_finclosed(d), cover, 1000);
  c.require(cert.has_value(), "certificate found");
  if (!cert) return;
  c.require(cert->n0 == 2, "n0 = 2");
  c.require(cert->verified, "certificate verified");
  std::vector<RatInterval> all = cert->used_pieces;
  all.insert(all.end(), cert->complement_pieces.begin(), cert->complement_pieces.end());
  c.require(covers(FinClosed::unit(), all), "independent sweep of the certificate");
  c.require(covers(d, cover.prefix(3)), "cover(0..2) covers D");
  c.require(!covers(d, cover.prefix(2)), "cover(0..1) fails the sweep");
  const double t = seconds_since(start);
  c.notes << "n0=" << cert->n0 << " time=" << t << "s ";
  c.require(t < 1.0, "under 1 s");
}

void criterion2(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(2024);
  const std::size_t entries = (std::size_t{1} << 11) + 11;  // dyadic stages 0..10
  int sets = 0;
  for (int trial = 0; trial < 60; ++trial, ++sets) {
    const auto raw = testsupport::random_open_pieces(rng, 4, 32);
    const FinOpen u(raw);
    const auto prefix = r3_to_r4(r4_to_r3_fin(u)).prefix(entries);
    for (const auto& e : prefix) c.require(e.is_empty() || u.contains_interval(e), "every entry inside U");
    for (const auto& q : testsupport::unit_grid(128)) {
      c.require(prefix_contains(prefix, q) == testsupport::brute_member_open(raw, q), "membership at k/128");
    }
  }
  const double t = seconds_since(start);
  c.notes << "sets=" << sets << " points=129 time=" << t << "s ";
  c.require(sets >= 50, "at least 50 sets");
  c.require(t < 5.0, "under 5 s");
}

void criterion3(Check& c) {
  std::size_t evaluations = 0;
  for (const Rational p : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
    const OpenR2 y = OpenR2::from_finopen(FinOpen::punctured(std::vector<Rational>{p}));
    for (unsigned k = 0; k <= 16; ++k) {
      for (const auto& x : testsupport::unit_grid(64)) {
        const Rational d = delta(y, exact_pincherle(), CauchyReal::constant(x), k);
        c.require((d - (x - p).abs()).abs() <= Rational::pow2(-static_cast<long>(k)), "delta within 2^-k of |x - p|");
        ++evaluations;
      }
    }
    for (unsigned n = 1; n <= 16; ++n) {
      c.require(is_full(y, exact_pincherle(), n) == Fullness::NotFull, "is_full reports NotFull");
      const Rational mu = exact_pincherle()(floor_gadget(y, n));
      c.require(mu.sign() > 0 && mu <= Rational::pow2(-static_cast<long>(n)), "0 < mu(Y_n) <= 2^-n");
    }
  }
  c.notes << "delta evaluations=" << evaluations << ' ';
}

void criterion4(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const R2Sequence sets = rational_complements();
  const auto point = baire_point(sets, 20, 100000, 33);
  c.require(point.has_value(), "baire_point returns");
  if (!point) return;
  const auto& nest = point->nest;
  c.require(nest.back().eps <= Rational::pow2(-21), "precision 2^-20 reached");
  for (std::size_t m = 0; m < nest.size(); ++m) {
    c.require(attempt_valid(Attempt{std::vector<Tag>(nest.begin(), nest.begin() + static_cast<std::ptrdiff_t>(m + 1))}),
              "nesting and halving at every step");
    const Rational q = enumerate_rational(m);
    const Rational y = min((nest[m].r - q).abs(), Rational(1));
    c.require(nest[m].eps < y, "closed tag inside the ball of Y_m");
  }
  c.require(nest.size() >= 33, "nest reaches depth 32");
  const auto audit = limit_audit(nest, sets, 32, kDefaultStageFuel);
  c.require(audit.pass, "limit_audit passes to depth 32");
  for (unsigned n = 0; n < 20; ++n) {
    for (unsigned i = 0; i < 4; ++i) {
      c.require((point->x.approx(n) - point->x.approx(n + i)).abs() <= Rational::pow2(-static_cast<long>(n)), "modulus");
    }
  }
  const double t = seconds_since(start);
  c.notes << "tags=" << nest.size() << " time=" << t << "s ";
  c.require(t < 10.0, "under 10 s");
}

void check_machine_run(Check& c, const R2Sequence& sets, TagMode mode, std::size_t& repairs) {
  std::vector<std::string> cases;
  const MachineState s = run_machine(sets, 1u << 20, 200, 100000, mode, [&](const std::string& line) {
    const auto a = line.find('\t');
    const auto b = line.find('\t', a + 1);
    cases.push_back(line.substr(a + 1, b - a - 1));
  });
  c.require(s.status == MachineStatus::Running, "still running after 200 steps");
  c.require(cases.size() == 200 && s.attempts.size() == 200, "one attempt per step");
  if (cases.size() != 200 || s.attempts.size() != 200) return;
  for (std::size_t i = 0; i < 200; ++i) {
    const Attempt& now = s.attempts[i];
    c.require(attempt_valid(now), "attempt invariants");
    if (cases[i] == "i") {
      c.require(i == 0 && now.tags.size() == 1 && now.tags[0].eps == Rational(1), "seed (r, 1)");
    } else if (cases[i] == "ii") {
      const Attempt& top = top_of(s.attempts, i);
      c.require(now.tags.size() == top.tags.size() + 1 &&
                    std::equal(top.tags.begin(), top.tags.end(), now.tags.begin()),
                "extension by one tag");
    } else if (cases[i] == "iv.2") {
      ++repairs;
      const Attempt& top = top_of(s.attempts, i);
      const std::size_t k = now.tags.size() - 1;
      bool ok = k < top.tags.size() && std::equal(now.tags.begin(), now.tags.end() - 1, top.tags.begin()) &&
                now.tags[k].r == top.tags[k].r && now.tags[k].eps * Rational(2) == top.tags[k].eps;
      c.require(ok, "iv.2 halves the last radius of a prefix");
    } else {
      c.require(false, "case " + cases[i]);
    }
  }
  for (std::size_t i = 0; i < s.attempts.size(); ++i) {
    for (std::size_t j = i + 1; j < s.attempts.size(); ++j) {
      c.require(attempt_before(s.attempts[i], s.attempts[j]) || attempt_before(s.attempts[j], s.attempts[i]),
                "attempts totally ordered");
    }
  }
}

void criterion5(Check& c) {
  std::size_t repairs = 0;
  check_machine_run(c, rational_complements(), TagMode::Containment, repairs);
  // Dense sets whose verbatim tags first converge to a removed point.
  const R2Sequence base = rational_complements();
  const R2Sequence scripted = [base](std::size_t n) {
    if (n == 0) return OpenR2::from_finopen(FinOpen::punctured(std::vector<Rational>{Rational(1, 2)}));
    if (n == 1) return OpenR2::from_finopen(FinOpen::punctured(std::vector<Rational>{Rational(0)}));
    return base(n);
  };
  check_machine_run(c, scripted, TagMode::Verbatim, repairs);
  c.require(repairs > 0, "the scripted run exercises iv.2");
  c.notes << "iv.2 repairs=" << repairs << ' ';
}

void criterion6(Check& c) {
  std::mt19937 rng(606);
  int pairs = 0;
  while (pairs < 50) {
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (int i = 0; i < 8; ++i) cuts.push_back(testsupport::grid_rational(rng, 64, 0, 64));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<RatInterval> a, b;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational w = (cuts[i + 1] - cuts[i]) / Rational(4);
      const auto which = rng() % 3;
      if (which == 0) a.push_back(RatInterval::closed(cuts[i] + w, cuts[i + 1] - w));
      if (which == 1) b.push_back(RatInterval::closed(cuts[i] + w, cuts[i + 1] - w));
    }
    const FinClosed c0(a), c1(b);
    if (c0.empty() || c1.empty()) continue;
    ++pairs;
    const PLFunction g = urysohn(c0, c1);
    c.require(g.min_value() >= Rational(0) && g.max_value() <= Rational(1), "range within [0,1]");
    // Exactly on C_i between the outermost pieces; beyond them g keeps the outermost label.
    const Rational left = min(c0.pieces().front().lo, c1.pieces().front().lo);
    const Rational right = max(c0.pieces().back().hi, c1.pieces().back().hi);
    for (const auto& x : testsupport::unit_grid(1000)) {
      if (c0.contains(x)) c.require(g(x) == Rational(0), "g = 0 on C0");
      if (c1.contains(x)) c.require(g(x) == Rational(1), "g = 1 on C1");
      if (left <= x && x <= right) {
        c.require((g(x) == Rational(0)) == c0.contains(x), "g = 0 only on C0");
        c.require((g(x) == Rational(1)) == c1.contains(x), "g = 1 only on C1");
      }
    }
    for (const auto* set : {&c0, &c1}) {
      for (const auto& p : set->pieces()) {
        const Rational want = set == &c0 ? Rational(0) : Rational(1);
        c.require(g(p.lo) == want && g(p.hi) == want, "g = i at endpoints of C_i");
      }
    }
    const PLFunction h = urysohn(c1, c0);
    for (const auto& [x, v] : g.breakpoints()) c.require(h(x) == Rational(1) - v, "swap symmetry");
    for (const auto& [x, v] : h.breakpoints()) c.require(g(x) == Rational(1) - v, "swap symmetry");

    // Tietze: f = g restricted to C0 ∪ C1 extends with the same sup.
    const FinClosed d = c0.unite(c1);
    std::vector<PLFunction::Point> fp;
    for (const auto& x : testsupport::unit_grid(64 * 4)) fp.emplace_back(x, testsupport::grid_rational(rng, 4, -8, 8));
    const PLFunction f(fp);
    const PLFunction ext = tietze_extend(d, f);
    Rational sup_d(0), sup_ext(0);
    for (const auto& x : testsupport::unit_grid(64 * 4)) {
      if (d.contains(x)) {
        c.require(ext(x) == f(x), "extension agrees on D");
        sup_d = max(sup_d, f(x).abs());
      }
    }
    for (const auto& [x, v] : ext.breakpoints()) sup_ext = max(sup_ext, v.abs());
    c.require(sup_ext == sup_d, "sup bound preserved");
  }
  c.notes << "pairs=" << pairs << ' ';
}

void criterion7(Check& c) {
  AdversaryFull adv;
  const FinOpen probed = r2_probe_r4(adv.oracle(), 10000);
  const Rational m = measure(probed.pieces());
  c.require(adv.log().size() == 10000, "10^4 distinct queries");
  c.require(m <= Rational(1, 2), "probe union measure <= 1/2");
  c.require(measure(adv.assigned_balls()) <= Rational(1, 2), "assigned balls measure <= 1/2");
  // The oracle presents [0,1]: every answer is positive and its ball stays in [0,1].
  const OpenR2 y = adv.oracle();
  for (const auto& q : adv.log().points()) {
    const Rational v = y(CauchyReal::constant(q), 0);
    c.require(v.sign() > 0 && FinOpen::full().contains_interval(RatInterval::open(q - v, q + v)), "radius promise");
  }
  c.require(y.shape && y.shape->open_set().covers_unit(), "represented set is [0,1]");
  c.notes << "measure~" << m.to_double() << ' ';
}

void criterion8(Check& c) {
  const auto hbc = adversary_hbc(naive_grid_hbc());
  c.require(hbc.refuted() && hbc.replay_faithful, "naive-grid refuted by adversary_hbc");
  if (hbc.witness) {
    const auto& w = *hbc.witness;
    // x is in D ∪ {x} but in no piece (1/(n+2), 1) with n <= k.
    bool covered = false;
    for (std::size_t n = 0; n <= w.k; ++n) {
      covered = covered || RatInterval::open(Rational(1, static_cast<long>(n) + 2), 1).contains(w.point);
    }
    c.require(!covered && w.point > Rational(0), "hbc witness verified independently");
    c.notes << "hbc witness x=" << w.point << " k=" << w.k << "; ";
  }

  const auto r2 = adversary_r2_cover(naive_grid_r2());
  c.require(r2.refuted() && r2.replay_faithful, "naive-grid refuted by adversary_r2_cover");
  if (r2.witness) {
    const auto& w = *r2.witness;
    // Sets 0..k of the second run are [0,1] \ {p}: p itself is uncovered.
    c.require(w.k <= *r2.first_answer + 1, "answer within the modified range");
    const FinOpen modified = FinOpen::punctured(std::vector<Rational>{w.point});
    c.require(testsupport::in_unit(w.point) && !modified.contains(w.point), "r2 witness verified independently");
    c.notes << "cover witness p=" << w.point << " k=" << w.k << "; ";
  }

  const auto pipeline = adversary_r2_cover(psi_pipeline_r2(100000));
  c.require(!pipeline.refuted() && pipeline.first_answer.has_value(), "psi pipeline survives");
}

void criterion9(Check& c) {
  const ClosedRM d = ClosedRM::from_finclosed(FinClosed({RatInterval::closed(Rational(1, 3), Rational(2, 3))}));
  const RatInterval middle = RatInterval::open(Rational(2, 5), Rational(3, 5));
  const auto w = whbc(d, OpenR4::constant(middle), Rational(1, 4), 10000);
  c.require(w.has_value(), "epsilon 1/4 succeeds");
  if (w) {
    c.require(total_length(w->patches) < Rational(1, 4), "patches measure < 1/4");
    std::vector<RatInterval> pieces = w->patches;
    pieces.push_back(middle);
    c.require(covers(FinClosed({RatInterval::closed(Rational(1, 3), Rational(2, 3))}), pieces), "patches cover the remainder");
    c.notes << "patch length=" << total_length(w->patches) << "; ";
  }
  c.require(!whbc(d, OpenR4::constant(middle), Rational(1, 10), 10000).has_value(), "epsilon 1/10 is Exhausted");
  const OpenR4 tail{[](std::size_t n) { return RatInterval::open(Rational(1, static_cast<long>(n) + 2), Rational(1)); }};
  const auto more = whbc(d, tail, Rational(1, 10), 10000);
  c.require(more && more->n0 == 2 && more->patches.empty(), "epsilon 1/10 with more cover enlarges n0");
}

}  // namespace

int main() {
  report(1, "HBC fixture", criterion1);
  report(2, "conversion round trip", criterion2);
  report(3, "delta correctness", criterion3);
  report(4, "Baire realiser", criterion4);
  report(5, "attempt machine conformance", criterion5);
  report(6, "Urysohn/Tietze", criterion6);
  report(7, "probe measure below 1/2", criterion7);
  report(8, "adversary refutations", criterion8);
  report(9, "WHBC budget", criterion9);
  return failures;
}
