// Copyright 2026 The Pentalogic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "penta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "penta/algebra.hpp"
#include "penta/format.hpp"
#include "penta/measures.hpp"
#include "penta/penta_value.hpp"
#include "penta/truth_table.hpp"

namespace penta {

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass:
      return "PASS";
    case LawStatus::fail:
      return "FAIL";
    case LawStatus::info:
      return "INFO";
  }
  return "?";
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const LawResult& law : laws) {
    if (law.status == LawStatus::fail) ++n;
  }
  return n;
}

namespace {

constexpr double kTight = 1e-12;
constexpr double kModularityTol = 1e-9;

// Per-law generator seed: FNV-1a over the user seed, the law id and the
// scope, then a splitmix finalizer. Each law draws from its own stream,
// so reports do not depend on law order or on which couples are enabled.
std::uint64_t law_seed(std::uint64_t seed, std::string_view id,
                       std::string_view scope) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto fold_byte = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (int k = 0; k < 8; ++k) {
    fold_byte(static_cast<unsigned char>(seed >> (8 * k)));
  }
  for (char ch : id) fold_byte(static_cast<unsigned char>(ch));
  fold_byte('/');
  for (char ch : scope) fold_byte(static_cast<unsigned char>(ch));
  h += 0x9e3779b97f4a7c15ull;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

double next_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

BifuzzyValue next_bifuzzy(std::mt19937_64& gen) {
  const double mu = next_unit(gen);
  const double nu = next_unit(gen);
  return BifuzzyValue(mu, nu);
}

// Uniform point of the five-part simplex, reported as (t,c,u,f) with the
// ambiguity part implied.
PentaValue next_simplex(std::mt19937_64& gen) {
  double cut[4] = {next_unit(gen), next_unit(gen), next_unit(gen),
                   next_unit(gen)};
  std::sort(cut, cut + 4);
  return PentaValue(cut[0], cut[1] - cut[0], cut[2] - cut[1],
                    cut[3] - cut[2]);
}

// Valid vector with t*f = 0 but c and u free: the widest domain the
// union/intersection pair is closed on for every couple.
PentaValue next_mixed(std::mt19937_64& gen) {
  const PentaValue p = next_simplex(gen);
  if ((gen() & 1u) == 0) {
    return PentaValue(p.t(), p.c(), p.u(), 0.0);
  }
  return PentaValue(0.0, p.c(), p.u(), p.f());
}

// Image of the (mu, nu) split: t*f = 0 and c*u = 0.
PentaValue next_image(std::mt19937_64& gen) {
  return to_penta(next_bifuzzy(gen), TransformMode::standard);
}

std::string render_penta(const PentaValue& p) {
  return "(t=" + format_sig9(p.t()) + " c=" + format_sig9(p.c()) +
         " u=" + format_sig9(p.u()) + " f=" + format_sig9(p.f()) + ")";
}

double component_diff(const PentaValue& a, const PentaValue& b) {
  return std::max(
      {std::fabs(a.t() - b.t()), std::fabs(a.c() - b.c()),
       std::fabs(a.u() - b.u()), std::fabs(a.f() - b.f())});
}

void run_law(VerifyReport& report, const VerifyOptions& options,
             std::string id, std::string scope, double tol, std::size_t count,
             bool informational,
             const std::function<double(std::size_t)>& magnitude,
             const std::function<std::string(std::size_t)>& detail) {
  const SweepResult s = sweep(count, tol, magnitude, options.exec);
  LawResult law;
  law.id = std::move(id);
  law.scope = std::move(scope);
  law.tolerance = tol;
  law.checked = s.checked;
  law.violations = s.violations;
  law.worst = s.worst;
  law.status = informational
                   ? LawStatus::info
                   : (s.violations == 0 ? LawStatus::pass : LawStatus::fail);
  if (s.violations > 0 && detail) {
    law.detail = detail(s.first_violation);
  }
  report.laws.push_back(std::move(law));
}

BifuzzyValue grid_point(int resolution, std::size_t idx) {
  const std::size_t n = static_cast<std::size_t>(resolution) + 1;
  const double mu = static_cast<double>(idx / n) / resolution;
  const double nu = static_cast<double>(idx % n) / resolution;
  return BifuzzyValue(mu, nu);
}

std::string render_grid_point(int resolution, std::size_t idx) {
  const BifuzzyValue v = grid_point(resolution, idx);
  return "mu=" + format_sig9(v.mu()) + " nu=" + format_sig9(v.nu());
}

void add_mode_laws(VerifyReport& rep, const VerifyOptions& o,
                   TransformMode mode) {
  const std::string scope = to_string(mode);
  const std::size_t cells =
      static_cast<std::size_t>(o.grid + 1) * static_cast<std::size_t>(o.grid + 1);
  const int grid = o.grid;

  run_law(
      rep, o, "partition", scope, kTight, cells, false,
      [&](std::size_t idx) {
        const PentaValue p = to_penta(grid_point(grid, idx), mode);
        return std::fabs(p.t() + p.c() + p.u() + p.f() + p.i() - 1.0);
      },
      [&](std::size_t idx) {
        const PentaValue p = to_penta(grid_point(grid, idx), mode);
        return render_grid_point(grid, idx) + " -> " + render_penta(p);
      });

  run_law(
      rep, o, "split-disjointness", scope, 0.0, cells, false,
      [&](std::size_t idx) {
        const PentaValue p = to_penta(grid_point(grid, idx), mode);
        return std::max(std::min(p.t(), p.f()), std::min(p.c(), p.u()));
      },
      [&](std::size_t idx) {
        const PentaValue p = to_penta(grid_point(grid, idx), mode);
        return render_grid_point(grid, idx) + " -> " + render_penta(p);
      });

  // The five anchor points that must land exactly on the constants.
  static const struct {
    double mu, nu;
    CrispLabel label;
  } kAnchors[5] = {{1, 0, CrispLabel::True},
                   {0, 1, CrispLabel::False},
                   {1, 1, CrispLabel::Inconsistent},
                   {0, 0, CrispLabel::Incomplete},
                   {0.5, 0.5, CrispLabel::Ambiguous}};
  run_law(
      rep, o, "crisp-anchors", scope, kTight, 5, false,
      [&, mode](std::size_t idx) {
        const auto& a = kAnchors[idx];
        const PentaValue p = to_penta(BifuzzyValue(a.mu, a.nu), mode);
        return component_diff(p, crisp_value(a.label));
      },
      [&, mode](std::size_t idx) {
        const auto& a = kAnchors[idx];
        const PentaValue p = to_penta(BifuzzyValue(a.mu, a.nu), mode);
        return "mu=" + format_sig9(a.mu) + " nu=" + format_sig9(a.nu) +
               " -> " + render_penta(p) + ", want constant " +
               to_char(a.label);
      });

  run_law(
      rep, o, "entropy-closed-form", scope, kTight, cells, false,
      [&, mode](std::size_t idx) {
        const BifuzzyValue v = grid_point(grid, idx);
        const double direct = entropy(to_penta(v, mode)).scalar;
        const double closed = mode == TransformMode::standard
                                  ? 1.0 - std::fabs(v.mu() - v.nu())
                                  : entropy_closed_form_balanced(v);
        return std::fabs(direct - closed);
      },
      [&](std::size_t idx) { return render_grid_point(grid, idx); });

  run_law(
      rep, o, "syntropy-closed-form", scope, kTight, cells, false,
      [&, mode](std::size_t idx) {
        const BifuzzyValue v = grid_point(grid, idx);
        const double direct = syntropy(to_penta(v, mode)).scalar;
        const double closed = mode == TransformMode::standard
                                  ? std::fabs(v.mu() - v.nu())
                                  : syntropy_closed_form_balanced(v);
        return std::fabs(direct - closed);
      },
      [&](std::size_t idx) { return render_grid_point(grid, idx); });
}

void add_global_laws(VerifyReport& rep, const VerifyOptions& o) {
  const std::size_t cells =
      static_cast<std::size_t>(o.grid + 1) * static_cast<std::size_t>(o.grid + 1);
  const int grid = o.grid;

  add_mode_laws(rep, o, TransformMode::standard);
  add_mode_laws(rep, o, TransformMode::balanced);

  run_law(
      rep, o, "roundtrip", "standard", kTight, cells, false,
      [&](std::size_t idx) {
        const BifuzzyValue v = grid_point(grid, idx);
        const BifuzzyValue w =
            from_penta(to_penta(v, TransformMode::standard));
        return std::max(std::fabs(w.mu() - v.mu()),
                        std::fabs(w.nu() - v.nu()));
      },
      [&](std::size_t idx) { return render_grid_point(grid, idx); });

  run_law(
      rep, o, "spread-identity", "standard", kTight, cells, false,
      [&](std::size_t idx) {
        const BifuzzyValue v = grid_point(grid, idx);
        const TauDelta td = tau_delta_standard(v);
        const double lhs = std::fabs(td.tau) + std::fabs(td.delta);
        const double rhs = std::max(std::fabs(2.0 * v.mu() - 1.0),
                                    std::fabs(2.0 * v.nu() - 1.0));
        return std::fabs(lhs - rhs);
      },
      [&](std::size_t idx) { return render_grid_point(grid, idx); });

  run_law(
      rep, o, "ambiguity-identity", "standard", kTight, cells, false,
      [&](std::size_t idx) {
        const BifuzzyValue v = grid_point(grid, idx);
        const double i = to_penta(v, TransformMode::standard).i();
        const double oracle =
            2.0 * std::min({v.mu(), v.nu(), 1.0 - v.mu(), 1.0 - v.nu()});
        return std::fabs(i - oracle);
      },
      [&](std::size_t idx) { return render_grid_point(grid, idx); });

  for (const char* op : {"complement", "negation", "dual"}) {
    std::mt19937_64 gen(law_seed(o.seed, "involution", op));
    std::vector<PentaValue> xs;
    xs.reserve(o.samples);
    for (std::size_t k = 0; k < o.samples; ++k) xs.push_back(next_simplex(gen));
    auto apply = [op](const PentaValue& x) {
      if (op[0] == 'c') return complement(x);
      if (op[0] == 'n') return negate(x);
      return dual(x);
    };
    run_law(
        rep, o, "involution", op, 0.0, o.samples, false,
        [&, apply](std::size_t idx) {
          return component_diff(apply(apply(xs[idx])), xs[idx]);
        },
        [&, apply](std::size_t idx) {
          return "x=" + render_penta(xs[idx]) +
                 " twice-applied=" + render_penta(apply(apply(xs[idx])));
        });
  }

  {
    std::mt19937_64 gen(law_seed(o.seed, "negation-composition", "global"));
    std::vector<PentaValue> xs;
    xs.reserve(o.samples);
    for (std::size_t k = 0; k < o.samples; ++k) xs.push_back(next_simplex(gen));
    run_law(
        rep, o, "negation-composition", "global", 0.0, o.samples, false,
        [&](std::size_t idx) {
          const PentaValue& x = xs[idx];
          return std::max(component_diff(negate(x), dual(complement(x))),
                          component_diff(negate(x), complement(dual(x))));
        },
        [&](std::size_t idx) { return "x=" + render_penta(xs[idx]); });
  }

  {
    std::mt19937_64 gen(law_seed(o.seed, "entropy-similarity", "standard"));
    std::vector<PentaValue> xs;
    xs.reserve(o.samples);
    for (std::size_t k = 0; k < o.samples; ++k) xs.push_back(next_image(gen));
    run_law(
        rep, o, "entropy-similarity", "standard", kTight, o.samples, false,
        [&](std::size_t idx) {
          const PentaValue& x = xs[idx];
          return std::fabs(entropy(x).scalar - similarity(x, complement(x)));
        },
        [&](std::size_t idx) { return "x=" + render_penta(xs[idx]); });
  }

  {
    std::mt19937_64 gen(law_seed(o.seed, "similarity-axioms", "global"));
    std::vector<PentaValue> xs, ys;
    xs.reserve(o.samples);
    ys.reserve(o.samples);
    for (std::size_t k = 0; k < o.samples; ++k) {
      xs.push_back(next_image(gen));
      ys.push_back(next_image(gen));
    }
    run_law(
        rep, o, "similarity-axioms", "global", kTight, o.samples, false,
        [&](std::size_t idx) {
          const double sxy = similarity(xs[idx], ys[idx]);
          const double syx = similarity(ys[idx], xs[idx]);
          const double sxx = similarity(xs[idx], xs[idx]);
          return std::max({-sxy, sxy - 1.0, std::fabs(sxx - 1.0),
                           std::fabs(sxy - syx)});
        },
        [&](std::size_t idx) {
          return "x=" + render_penta(xs[idx]) + " y=" + render_penta(ys[idx]);
        });
  }
}

// Validity defect of a raw (t,c,u,f) quadruple: how far any component
// falls below zero or the component sum rises above one.
double validity_defect(double t, double c, double u, double f) {
  double d = 0.0;
  for (double x : {t, c, u, f}) {
    if (-x > d) d = -x;
  }
  const double sum = t + c + u + f;
  if (sum - 1.0 > d) d = sum - 1.0;
  return d;
}

struct RawPair {
  double ut, uc, uu, uf;  // union components
  double it, ic, iu, if_;  // intersection components
};

// Union and intersection computed without PentaValue validation, so
// closure laws can measure violations instead of catching exceptions.
RawPair raw_ops(const PentaValue& x, const PentaValue& y,
                const NormCouple& k) {
  RawPair r;
  const double tf = k.tnorm(x.f(), y.f());
  r.ut = k.tconorm(x.t(), y.t());
  r.uc = k.tnorm(x.c() + x.f(), y.c() + y.f()) - tf;
  r.uu = k.tnorm(x.u() + x.f(), y.u() + y.f()) - tf;
  r.uf = tf;
  const double tt = k.tnorm(x.t(), y.t());
  r.it = tt;
  r.ic = k.tnorm(x.c() + x.t(), y.c() + y.t()) - tt;
  r.iu = k.tnorm(x.u() + x.t(), y.u() + y.t()) - tt;
  r.if_ = k.tconorm(x.f(), y.f());
  return r;
}

void add_couple_laws(VerifyReport& rep, const VerifyOptions& o,
                     const NormCouple& couple) {
  const std::string scope = couple.name();
  const std::size_t n = o.samples;

  {
    std::mt19937_64 gen(law_seed(o.seed, "tnorm-axioms", scope));
    std::vector<double> as, bs;
    as.reserve(n);
    bs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      as.push_back(next_unit(gen));
      bs.push_back(next_unit(gen));
    }
    run_law(
        rep, o, "tnorm-axioms", scope, kTight, n, false,
        [&, couple](std::size_t idx) {
          const double a = as[idx];
          const double b = bs[idx];
          return std::max({std::fabs(couple.tnorm(a, 1.0) - a),
                           std::fabs(couple.tnorm(a, 0.0)),
                           std::fabs(couple.tconorm(a, 0.0) - a),
                           std::fabs(couple.tconorm(a, 1.0) - 1.0),
                           std::fabs(couple.tnorm(a, b) - couple.tnorm(b, a)),
                           std::fabs(couple.tconorm(a, b) -
                                     couple.tconorm(b, a))});
        },
        [&](std::size_t idx) {
          return "a=" + format_sig9(as[idx]) + " b=" + format_sig9(bs[idx]);
        });
  }

  {
    std::mt19937_64 gen(law_seed(o.seed, "tnorm-associativity", scope));
    std::vector<double> as, bs, cs;
    as.reserve(n);
    bs.reserve(n);
    cs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      as.push_back(next_unit(gen));
      bs.push_back(next_unit(gen));
      cs.push_back(next_unit(gen));
    }
    run_law(
        rep, o, "tnorm-associativity", scope, kTight, n, false,
        [&, couple](std::size_t idx) {
          const double a = as[idx];
          const double b = bs[idx];
          const double c = cs[idx];
          return std::max(
              std::fabs(couple.tnorm(a, couple.tnorm(b, c)) -
                        couple.tnorm(couple.tnorm(a, b), c)),
              std::fabs(couple.tconorm(a, couple.tconorm(b, c)) -
                        couple.tconorm(couple.tconorm(a, b), c)));
        },
        [&](std::size_t idx) {
          return "a=" + format_sig9(as[idx]) + " b=" + format_sig9(bs[idx]) +
                 " c=" + format_sig9(cs[idx]);
        });
  }

  {
    std::mt19937_64 gen(law_seed(o.seed, "frank-equation", scope));
    std::vector<double> as, bs;
    as.reserve(n);
    bs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      as.push_back(next_unit(gen));
      bs.push_back(next_unit(gen));
    }
    run_law(
        rep, o, "frank-equation", scope, kTight, n, false,
        [&, couple](std::size_t idx) {
          const double a = as[idx];
          const double b = bs[idx];
          return std::fabs(couple.tnorm(a, b) + couple.tconorm(a, b) - a - b);
        },
        [&](std::size_t idx) {
          return "a=" + format_sig9(as[idx]) + " b=" + format_sig9(bs[idx]);
        });
  }

  {
    // Truth tables are diffed cell by cell rather than swept; the result
    // record carries the mismatch count in both violations and worst.
    LawResult law;
    law.id = "truth-tables";
    law.scope = scope;
    law.tolerance = 0.0;
    law.checked = 115;
    try {
      for (Connective op : kAllConnectives) {
        const TruthTable got = generate_truth_table(op, couple);
        const std::vector<CellMismatch> bad = diff(got, reference_table(op));
        law.violations += bad.size();
        if (!bad.empty() && law.detail.empty()) {
          const CellMismatch& m = bad.front();
          law.detail = std::string(to_string(op)) + "[" + to_char(m.row) +
                       "," + to_char(m.col) + "]: got " + to_char(m.got) +
                       ", want " + to_char(m.want);
        }
      }
    } catch (const std::exception& e) {
      law.violations = law.checked;
      law.detail = e.what();
    }
    law.worst = static_cast<double>(law.violations);
    law.status = law.violations == 0 ? LawStatus::pass : LawStatus::fail;
    rep.laws.push_back(std::move(law));
  }

  std::mt19937_64 pair_gen(law_seed(o.seed, "pairs", scope));
  std::vector<PentaValue> xs, ys, zs;
  xs.reserve(n);
  ys.reserve(n);
  zs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs.push_back(next_mixed(pair_gen));
    ys.push_back(next_mixed(pair_gen));
    zs.push_back(next_mixed(pair_gen));
  }
  auto pair_detail = [&](std::size_t idx) {
    return "x=" + render_penta(xs[idx]) + " y=" + render_penta(ys[idx]);
  };

  run_law(
      rep, o, "commutativity", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue& y = ys[idx];
        return std::max(
            component_diff(unite(x, y, couple), unite(y, x, couple)),
            component_diff(intersect(x, y, couple), intersect(y, x, couple)));
      },
      pair_detail);

  run_law(
      rep, o, "associativity", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue& y = ys[idx];
        const PentaValue& z = zs[idx];
        return std::max(
            component_diff(unite(unite(x, y, couple), z, couple),
                           unite(x, unite(y, z, couple), couple)),
            component_diff(intersect(intersect(x, y, couple), z, couple),
                           intersect(x, intersect(y, z, couple), couple)));
      },
      [&](std::size_t idx) {
        return pair_detail(idx) + " z=" + render_penta(zs[idx]);
      });

  run_law(
      rep, o, "neutral-elements", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue bottom = crisp_value(CrispLabel::False);
        const PentaValue top = crisp_value(CrispLabel::True);
        return std::max(component_diff(unite(x, bottom, couple), x),
                        component_diff(intersect(x, top, couple), x));
      },
      [&](std::size_t idx) { return "x=" + render_penta(xs[idx]); });

  run_law(
      rep, o, "absorbing-elements", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue bottom = crisp_value(CrispLabel::False);
        const PentaValue top = crisp_value(CrispLabel::True);
        return std::max(component_diff(unite(x, top, couple), top),
                        component_diff(intersect(x, bottom, couple), bottom));
      },
      [&](std::size_t idx) { return "x=" + render_penta(xs[idx]); });

  run_law(
      rep, o, "de-morgan", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue& y = ys[idx];
        return std::max(
            component_diff(complement(unite(x, y, couple)),
                           intersect(complement(x), complement(y), couple)),
            component_diff(complement(intersect(x, y, couple)),
                           unite(complement(x), complement(y), couple)));
      },
      pair_detail);

  run_law(
      rep, o, "dual-distribution", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue& y = ys[idx];
        return std::max(
            component_diff(dual(unite(x, y, couple)),
                           unite(dual(x), dual(y), couple)),
            component_diff(dual(intersect(x, y, couple)),
                           intersect(dual(x), dual(y), couple)));
      },
      pair_detail);

  run_law(
      rep, o, "closure", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const RawPair r = raw_ops(xs[idx], ys[idx], couple);
        double d = std::max(validity_defect(r.ut, r.uc, r.uu, r.uf),
                            validity_defect(r.it, r.ic, r.iu, r.if_));
        // Inputs keep t*f = 0; outputs must as well.
        d = std::max(d, std::min(r.ut, r.uf));
        d = std::max(d, std::min(r.it, r.if_));
        return d;
      },
      pair_detail);

  run_law(
      rep, o, "entropy-modularity", scope, kModularityTol, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue& y = ys[idx];
        const double lhs = entropy(unite(x, y, couple)).scalar +
                           entropy(intersect(x, y, couple)).scalar;
        const double rhs = entropy(x).scalar + entropy(y).scalar;
        return std::fabs(lhs - rhs);
      },
      pair_detail);

  run_law(
      rep, o, "syntropy-modularity", scope, kModularityTol, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        const PentaValue& y = ys[idx];
        const double lhs = syntropy(unite(x, y, couple)).scalar +
                           syntropy(intersect(x, y, couple)).scalar;
        const double rhs = syntropy(x).scalar + syntropy(y).scalar;
        return std::fabs(lhs - rhs);
      },
      pair_detail);

  run_law(
      rep, o, "idempotence", scope, kTight, n, false,
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        return std::max(component_diff(unite(x, x, couple), x),
                        component_diff(intersect(x, x, couple), x));
      },
      [&, couple](std::size_t idx) {
        const PentaValue& x = xs[idx];
        return "x=" + render_penta(x) +
               " union(x,x)=" + render_penta(unite(x, x, couple)) +
               " intersection(x,x)=" + render_penta(intersect(x, x, couple));
      });

  {
    std::mt19937_64 gen(law_seed(o.seed, "ambiguity-preservation", scope));
    std::vector<PentaValue> ixs, iys;
    ixs.reserve(n);
    iys.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      ixs.push_back(next_image(gen));
      iys.push_back(next_image(gen));
    }
    run_law(
        rep, o, "ambiguity-preservation", scope, kTight, n, false,
        [&, couple](std::size_t idx) {
          const PentaValue a = unite(ixs[idx], iys[idx], couple);
          const PentaValue b = intersect(ixs[idx], iys[idx], couple);
          return std::max(std::min(a.c(), a.u()), std::min(b.c(), b.u()));
        },
        [&, couple](std::size_t idx) {
          const PentaValue& x = ixs[idx];
          const PentaValue& y = iys[idx];
          const PentaValue a = unite(x, y, couple);
          const PentaValue b = intersect(x, y, couple);
          return "x=" + render_penta(x) + " y=" + render_penta(y) +
                 " union=" + render_penta(a) +
                 " (c*u=" + format_sig9(a.c() * a.u()) + ")" +
                 " intersection=" + render_penta(b) +
                 " (c*u=" + format_sig9(b.c() * b.u()) + ")";
        });
  }

  {
    std::mt19937_64 gen(law_seed(o.seed, "simplex-closure", scope));
    std::vector<PentaValue> sxs, sys;
    sxs.reserve(n);
    sys.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      sxs.push_back(next_simplex(gen));
      sys.push_back(next_simplex(gen));
    }
    run_law(
        rep, o, "simplex-closure", scope, kTight, n, true,
        [&, couple](std::size_t idx) {
          const RawPair r = raw_ops(sxs[idx], sys[idx], couple);
          return std::max(validity_defect(r.ut, r.uc, r.uu, r.uf),
                          validity_defect(r.it, r.ic, r.iu, r.if_));
        },
        [&, couple](std::size_t idx) {
          return "x=" + render_penta(sxs[idx]) +
                 " y=" + render_penta(sys[idx]) +
                 " (inputs allow t*f > 0; no closure is claimed here)";
        });
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }
  if (options.grid < 1) {
    throw std::invalid_argument("grid must be >= 1");
  }
  if (options.couples.empty()) {
    throw std::invalid_argument("at least one couple is required");
  }
  VerifyReport report;
  report.options = options;
  add_global_laws(report, options);
  for (const NormCouple& couple : options.couples) {
    add_couple_laws(report, options, couple);
  }
  return report;
}

std::string render_text(const VerifyReport& report) {
  const VerifyOptions& o = report.options;
  std::string out = "verify seed=" + std::to_string(o.seed) +
                    " samples=" + std::to_string(o.samples) +
                    " grid=" + std::to_string(o.grid) +
                    " exec=" + to_string(o.exec) + " couples=";
  for (std::size_t k = 0; k < o.couples.size(); ++k) {
    if (k > 0) out += ',';
    out += o.couples[k].name();
  }
  out += '\n';
  auto pad = [](std::string text, std::size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text + ' ';
  };
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t info = 0;
  for (const LawResult& law : report.laws) {
    (law.status == LawStatus::pass
         ? pass
         : law.status == LawStatus::fail ? fail : info)++;
    out += "[" + to_string(law.status) + "] " + pad(law.id, 24) +
           pad(law.scope, 18) + "checked=" + std::to_string(law.checked) +
           " violations=" + std::to_string(law.violations) +
           " worst=" + format_sig9(law.worst) +
           " tol=" + format_sig9(law.tolerance) + "\n";
    if (!law.detail.empty()) {
      out += "       counterexample: " + law.detail + "\n";
    }
  }
  out += "summary: laws=" + std::to_string(report.laws.size()) +
         " pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
         " info=" + std::to_string(info) + "\n";
  return out;
}

}  // namespace penta
