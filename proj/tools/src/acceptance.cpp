#include "acceptance.hpp"

#include "app.hpp"
#include "rayzeta/error.hpp"
#include "rayzeta/family.hpp"
#include "rayzeta/hecke.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace rayzeta::cli {
namespace {

// Counts checks and keeps the first few failures for the detail line.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (examples_.size() < 3) examples_.push_back(what());
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  bool pass() const { return failed_ == 0 && total_ > 0; }

  std::string detail() const {
    std::ostringstream out;
    out << total_ - failed_ << "/" << total_ << " checks";
    for (const std::string& n : notes_) out << "; " << n;
    if (total_ == 0) out << "; nothing was checked";
    if (!examples_.empty()) {
      out << "; first failures:";
      for (const std::string& e : examples_) out << " [" << e << "]";
    }
    return out.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> examples_;
  std::vector<std::string> notes_;
};

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::int64_t x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::vector<RayLabel> nonzero_labels(std::int64_t q) {
  std::vector<RayLabel> out;
  for (std::int64_t c = 0; c < q; ++c) {
    for (std::int64_t d = 0; d < q; ++d) {
      if (c != 0 || d != 0) out.push_back(RayLabel{c, d});
    }
  }
  return out;
}

std::vector<std::int64_t> usable_k(const Family& family, const RayLabel& label, std::int64_t q, std::int64_t r,
                                   const std::vector<std::int64_t>& ks) {
  std::vector<std::int64_t> out;
  for (std::int64_t k : ks) {
    const auto inst = family.instance(q * k + r);
    if (inst && in_f_delta(inst->field.basis(), q, label)) out.push_back(k);
  }
  return out;
}

// Orbit recursion (C, D) -> (cc C + cd D, dc C + dd D) mod q.
struct Recursion {
  Integer cc, cd, dc, dd;
};

// The recursions as printed for the two presets.
Recursion printed_recursion(const std::string& family, const Integer& n) {
  if (family == "rd-n2p2") {
    return {n * n + 1, 2 * n * n * n + n * n + 3 * n + 1, n, 2 * n * n + n + 1};
  }
  const Integer n2 = n * n;
  const Integer n3 = n2 * n;
  return {8 * n3 + 12 * n2 + 6 * n + 2, 64 * n3 * n2 + 160 * n2 * n2 + 168 * n3 + 104 * n2 + 38 * n + 7,
          2 * n + 1, 16 * n3 + 24 * n2 + 14 * n + 4};
}

// With eps = (1 - t) + t delta (t = n resp. 2n + 1) and delta^2 =
// tr delta - N(delta), multiplication by eps in the basis [1, delta].
Recursion derived_recursion(const std::string& family, const Integer& n) {
  const Integer t = family == "rd-n2p2" ? n : 2 * n + 1;
  if (family == "rd-n2p2") return {1 - t, -(2 * t * t - t), t, 2 * t * t + t + 1};
  return {1 - t, -(2 * t * t * t - 2 * t * t + t), t, 2 * t * t * t + t + 1};
}

RayLabel apply(const Recursion& rec, const RayLabel& label, std::int64_t q) {
  const Integer qq(q);
  return RayLabel{to_int64(residue_zero(rec.cc * label.c + rec.cd * label.d, qq)),
                  to_int64(residue_zero(rec.dc * label.c + rec.dd * label.d, qq))};
}

// Shared state: families and quasi_poly results reused across criteria.
class Context {
 public:
  explicit Context(const AcceptanceOptions& options) : options_(options) {
    for (const char* name : {"rd-n2p2", "quartic-16n4"}) {
      FamilySpec spec = preset(name);
      families_.push_back(std::make_unique<Family>(spec));
    }
  }

  const AcceptanceOptions& options() const { return options_; }
  const std::vector<std::unique_ptr<Family>>& families() const { return families_; }

  // Instances with n_min <= n <= n_max; squarefree failures are skipped.
  std::vector<std::shared_ptr<const FamilyInstance>> instances(const Family& family) const {
    std::vector<std::shared_ptr<const FamilyInstance>> out;
    for (std::int64_t n = family.spec().n_min; n <= options_.n_max; ++n) {
      if (auto inst = family.instance(n)) out.push_back(std::move(inst));
    }
    return out;
  }

  struct ClassResult {
    std::vector<std::int64_t> usable;
    std::optional<QuasiPolyResult> closed;
    std::optional<FitResult> fit;
    std::string error;
  };

  const ClassResult& class_result(std::size_t family_index, const RayLabel& label, std::int64_t q, std::int64_t r) {
    const auto key = std::make_tuple(family_index, q, r, label);
    auto it = classes_.find(key);
    if (it != classes_.end()) return it->second;
    const Family& family = *families_[family_index];
    ClassResult res;
    res.usable = usable_k(family, label, q, r, options_.ks);
    if (res.usable.size() >= family.spec().degree() + 2) {
      try {
        res.fit = fit_oracle(family, label, q, r, options_.ks);
        res.closed = quasi_poly(family, label, q, r, options_.ks);
      } catch (const std::exception& e) {
        res.error = e.what();
      }
    }
    return classes_.emplace(key, std::move(res)).first->second;
  }

 private:
  const AcceptanceOptions& options_;
  std::vector<std::unique_ptr<Family>> families_;
  std::map<std::tuple<std::size_t, std::int64_t, std::int64_t, RayLabel>, ClassResult> classes_;
};

// A1 / A2: continued fraction of delta(n) - 1 and the fundamental unit.
CriterionResult structure(const std::string& name, std::int64_t n_lo, std::int64_t n_hi,
                          const std::function<Integer(const Integer&)>& f,
                          const std::function<std::vector<Integer>(const Integer&)>& period,
                          const std::function<std::pair<Integer, Integer>(const Integer&)>& unit) {
  Tally tally;
  std::vector<std::int64_t> skipped;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const Integer nn(n);
    const Integer radicand = f(nn);
    if (!is_squarefree(radicand)) {
      skipped.push_back(n);
      continue;
    }
    const QuadField field(radicand);
    const QuadElem delta = field.ring_delta();
    const QuadElem one = field.element(1);
    const PeriodicCF cf = plus_cf(delta - one);
    tally.check(cf.terms == period(nn), [&] { return name + " n=" + std::to_string(n) + ": continued fraction"; });
    const auto [a, b] = unit(nn);
    const QuadElem eps = fundamental_unit_totally_positive(field);
    tally.check(eps == field.element(a, b),
                [&] { return name + " n=" + std::to_string(n) + ": unit " + eps.to_string(); });
  }
  tally.note("n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi) +
             (skipped.empty() ? "" : ", non-squarefree skipped: " + join(skipped)));
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

CriterionResult a1(Context& ctx) {
  return structure(
      "rd-n2p2", 1, ctx.options().n_max_quadratic, [](const Integer& n) { return Integer(n * n + 2); },
      [](const Integer& n) { return std::vector<Integer>{2 * n, n}; },
      [](const Integer& n) { return std::pair<Integer, Integer>{n * n + 1, n}; });
}

CriterionResult a2(Context& ctx) {
  return structure(
      "quartic-16n4", 0, ctx.options().n_max,
      [](const Integer& n) { return Integer(16 * pow(n, 4) + 32 * pow(n, 3) + 24 * n * n + 12 * n + 3); },
      [](const Integer& n) { return std::vector<Integer>{8 * n * n + 8 * n + 2, 2 * n + 1}; },
      [](const Integer& n) {
        const Integer t = 2 * n + 1;
        return std::pair<Integer, Integer>{t * t * t + 1, t};
      });
}

// A3: Yamamoto recursion against the direct lattice solve.
CriterionResult a3(Context& ctx) {
  Tally tally;
  for (const auto& family : ctx.families()) {
    for (const auto& inst : ctx.instances(*family)) {
      const ShintaniField& field = inst->field;
      for (std::int64_t q : ctx.options().qs) {
        const std::size_t count = static_cast<std::size_t>(field.lambda(q)) * field.m();
        const std::vector<QuadElem> points = boundary_points(field.basis(), field.minus(), count);
        const QuadElem closing = pow(conj(field.eps()), static_cast<unsigned>(field.lambda(q)));
        tally.check(points.back() == closing, [&] {
          return family->spec().name + " n=" + std::to_string(inst->n) + " q=" + std::to_string(q) +
                 ": P_(lambda m) != eps^-lambda";
        });
        for (const RayLabel& label : f_delta(field.basis(), q)) {
          const XYSeq xy = yamamoto_xy(label, q, field.minus(), count);
          bool ok = true;
          std::size_t bad = 0;
          for (std::size_t i = 0; i <= count && ok; ++i) {
            const auto [x, y] = xy_direct(label, q, field.basis(), points[i], points[i + 1]);
            ok = x == xy.xs[i] && y == xy.ys[i];
            bad = i;
          }
          tally.check(ok, [&] {
            return family->spec().name + " n=" + std::to_string(inst->n) + " q=" + std::to_string(q) + " " +
                   label.to_string() + " index " + std::to_string(bad);
          });
        }
      }
    }
  }
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

// A4: printed orbit recursions, orbit length and periodicity in n.
CriterionResult a4(Context& ctx) {
  Tally tally;
  std::size_t labels_checked = 0;
  std::size_t c_mismatch = 0;
  std::size_t d_mismatch = 0;
  std::size_t derived_mismatch = 0;
  for (const auto& family : ctx.families()) {
    const std::string& name = family->spec().name;
    for (const auto& inst : ctx.instances(*family)) {
      const ShintaniField& field = inst->field;
      const Integer n(inst->n);
      const Recursion printed = printed_recursion(name, n);
      const Recursion derived = derived_recursion(name, n);
      for (std::int64_t q : ctx.options().qs) {
        for (const RayLabel& label : nonzero_labels(q)) {
          const RayLabel image = eps_act(field.eps(), label, field.basis(), q);
          const RayLabel by_matrix = eps_act(field.unit(), label, q);
          const RayLabel by_printed = apply(printed, label, q);
          ++labels_checked;
          if (by_printed.c != image.c) ++c_mismatch;
          if (by_printed.d != image.d) ++d_mismatch;
          if (apply(derived, label, q) != image || by_matrix != image) ++derived_mismatch;
          tally.check(by_printed == image, [&] {
            return name + " n=" + std::to_string(inst->n) + " q=" + std::to_string(q) + " " + label.to_string() +
                   ": eps_act " + image.to_string() + ", printed recursion " + by_printed.to_string();
          });
        }

        const std::int64_t lambda = field.lambda(q);
        std::shared_ptr<const FamilyInstance> shifted;
        for (std::int64_t j = 1; j <= 8 && !shifted; ++j) shifted = family->instance(inst->n + j * q);
        for (const RayLabel& label : f_delta(field.basis(), q)) {
          const std::vector<RayLabel> orb = orbit(label, field.unit(), q);
          tally.check(static_cast<std::int64_t>(orb.size()) == lambda, [&] {
            return name + " n=" + std::to_string(inst->n) + " q=" + std::to_string(q) + " " + label.to_string() +
                   ": orbit length " + std::to_string(orb.size()) + " != lambda " + std::to_string(lambda);
          });
          if (shifted) {
            tally.check(orbit(label, shifted->field.unit(), q) == orb, [&] {
              return name + " " + label.to_string() + ": orbit differs between n=" + std::to_string(inst->n) +
                     " and n=" + std::to_string(shifted->n);
            });
          }
        }
      }
    }
  }
  tally.note("printed recursion over " + std::to_string(labels_checked) + " labels: C' disagrees on " +
             std::to_string(c_mismatch) + ", D' disagrees on " + std::to_string(d_mismatch));
  tally.note("recursion re-derived from eps = (1-t) + t*delta disagrees on " + std::to_string(derived_mismatch));
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

// A5: closed forms equal exact interpolation; anchor value.
CriterionResult a5(Context& ctx) {
  Tally tally;
  std::size_t classes = 0;
  std::size_t too_few = 0;
  for (std::size_t fi = 0; fi < ctx.families().size(); ++fi) {
    const Family& family = *ctx.families()[fi];
    const unsigned d = family.spec().degree();
    for (std::int64_t q : ctx.options().qs) {
      for (std::int64_t r = 0; r < q; ++r) {
        for (const RayLabel& label : nonzero_labels(q)) {
          const auto& res = ctx.class_result(fi, label, q, r);
          if (res.usable.size() < d + 2) {
            ++too_few;
            continue;
          }
          ++classes;
          const std::string where = family.spec().name + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                    " " + label.to_string();
          tally.check(res.error.empty(), [&] { return where + ": " + res.error; });
          if (!res.error.empty()) continue;
          tally.check(res.fit->consistent, [&] { return where + ": samples not on a degree <= d polynomial"; });
          tally.check(res.closed->coeffs == res.fit->coeffs, [&] { return where + ": closed form != fit"; });
        }
      }
    }
  }
  const Family& quadratic = *ctx.families()[0];
  const auto inst = quadratic.instance(1);
  const Rational anchor = partial_zeta0(RayLabel{1, 0}, inst->field, 2);
  tally.check(anchor == Rational(1, 6) && inst->radicand == 3,
              [&] { return "anchor zeta_2(0, O_K) at n=1 is " + to_string(anchor); });
  tally.note(std::to_string(classes) + " classes fitted, " + std::to_string(too_few) + " with fewer than d+2 samples");
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

// A6: denominators of member coefficients and of n-form coefficients.
CriterionResult a6(Context& ctx) {
  Tally tally;
  for (std::size_t fi = 0; fi < ctx.families().size(); ++fi) {
    const Family& family = *ctx.families()[fi];
    for (std::int64_t q : ctx.options().qs) {
      const Rational scale = 12 * q * q;
      for (std::int64_t r = 0; r < q; ++r) {
        for (const RayLabel& label : nonzero_labels(q)) {
          const auto& res = ctx.class_result(fi, label, q, r);
          if (!res.closed) continue;
          const std::string where = family.spec().name + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                    " " + label.to_string();
          for (const auto& [member, coeffs] : res.closed->member_coeffs) {
            const bool ok = std::all_of(coeffs.begin(), coeffs.end(),
                                        [&](const Rational& b) { return is_integer(scale * b); });
            tally.check(ok, [&] { return where + ": 12q^2 B for member " + member.to_string(); });
          }
          QuasiPoly k_form{q, family.spec().degree(), QuasiForm::k_form, {}};
          k_form.coeffs.emplace(r, res.closed->coeffs);
          tally.check(n_form_denominators_ok(k_to_n_form(k_form)), [&] { return where + ": 12q^(i+2) A_i"; });
        }
      }
    }
  }
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

// A7: k-form <-> n-form round trips on random quasi-polynomials.
CriterionResult a7(Context& ctx) {
  Tally tally;
  std::mt19937_64 rng(ctx.options().seed);
  std::uniform_int_distribution<std::int64_t> q_dist(1, 7);
  std::uniform_int_distribution<unsigned> deg_dist(0, 3);
  std::uniform_int_distribution<std::int64_t> num_dist(-60, 60);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 24);
  for (int trial = 0; trial < ctx.options().random_quasi_polys; ++trial) {
    QuasiPoly p;
    p.q = q_dist(rng);
    p.degree = deg_dist(rng);
    p.form = trial % 2 == 0 ? QuasiForm::k_form : QuasiForm::n_form;
    for (std::int64_t r = 0; r < p.q; ++r) {
      std::vector<Rational> c;
      for (unsigned i = 0; i <= p.degree; ++i) c.emplace_back(num_dist(rng), den_dist(rng));
      p.coeffs.emplace(r, std::move(c));
    }
    const QuasiPoly other = p.form == QuasiForm::k_form ? k_to_n_form(p) : n_to_k_form(p);
    const QuasiPoly back = p.form == QuasiForm::k_form ? n_to_k_form(other) : k_to_n_form(other);
    bool same = back == p;
    for (std::int64_t n = 0; n < 4 * p.q; ++n) same = same && p.evaluate(n) == other.evaluate(n);
    tally.check(same, [&] {
      return "trial " + std::to_string(trial) + " q=" + std::to_string(p.q) + " degree " + std::to_string(p.degree);
    });
  }
  tally.note("seed " + std::to_string(ctx.options().seed));
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

// Largest label of each orbit, a representative choice different from
// orbit_representatives.
std::vector<RayLabel> max_representatives(const ShintaniField& field, std::int64_t q) {
  std::set<RayLabel> seen;
  std::vector<RayLabel> reps;
  for (const RayLabel& label : f_delta(field.basis(), q)) {
    if (seen.contains(label)) continue;
    const std::vector<RayLabel> orb = orbit(label, field.unit(), q);
    seen.insert(orb.begin(), orb.end());
    reps.push_back(*std::max_element(orb.begin(), orb.end()));
  }
  return reps;
}

// A8: L-value assembly.
CriterionResult a8(Context& ctx) {
  Tally tally;
  // Trivial character: one partial zeta value per orbit, any representatives.
  for (const auto& family : ctx.families()) {
    for (const auto& inst : ctx.instances(*family)) {
      for (std::int64_t q : ctx.options().qs) {
        const DirichletChar chi = DirichletChar::trivial(q);
        const LValue l = hecke_L0(inst->field, chi);
        Rational total = 0;
        for (const RayLabel& rep : max_representatives(inst->field, q)) total += partial_zeta0(rep, inst->field, q);
        CharSpanValue expected;
        expected.add(1, total);
        tally.check(l.value == expected, [&] {
          return family->spec().name + " n=" + std::to_string(inst->n) + " q=" + std::to_string(q) +
                 ": trivial L " + l.value.to_string() + " vs " + expected.to_string();
        });
      }
    }
  }

  // Order-4 character mod 5 with chi(2) = i on the quadratic family.
  const Family& family = *ctx.families()[0];
  const std::int64_t q = 5;
  const DirichletChar chi(q, 4, {{2, 1}});
  for (const auto& inst : ctx.instances(family)) {
    CharSpanValue other;
    for (const RayLabel& rep : max_representatives(inst->field, q)) {
      other.add(*ray_char_value(chi, inst->field.basis().ideal_norm(rep.c, rep.d)),
                partial_zeta0(rep, inst->field, q));
    }
    tally.check(hecke_L0(inst->field, chi).value == other, [&] {
      return "chi mod 5 n=" + std::to_string(inst->n) + ": L depends on the orbit representatives";
    });
  }
  const unsigned d = family.spec().degree();
  try {
    const CharQuasiPoly lq = hecke_L0_family(family, chi, ctx.options().ks);
    for (std::int64_t r = 0; r < q; ++r) {
      std::vector<std::int64_t> ks;
      std::vector<CharSpanValue> direct;
      for (std::int64_t k : ctx.options().ks) {
        if (auto inst = family.instance(q * k + r)) {
          ks.push_back(k);
          direct.push_back(hecke_L0(inst->field, chi).value);
        }
      }
      const std::string where = "chi mod 5 r=" + std::to_string(r);
      tally.check(ks.size() >= d + 2, [&] { return where + ": fewer than d+2 samples"; });
      if (ks.size() < d + 2) continue;
      for (std::int64_t symbol : {1, 2, 3, 4}) {
        std::vector<Rational> xs;
        std::vector<Rational> ys;
        for (std::size_t j = 0; j < ks.size(); ++j) {
          xs.emplace_back(ks[j]);
          const auto it = direct[j].terms().find(symbol);
          ys.push_back(it == direct[j].terms().end() ? Rational(0) : it->second);
        }
        const Polynomial fit = interpolate(std::vector<Rational>(xs.begin(), xs.begin() + d + 1),
                                           std::vector<Rational>(ys.begin(), ys.begin() + d + 1));
        bool ok = true;
        for (std::size_t j = d + 1; j < xs.size(); ++j) ok = ok && fit(xs[j]) == ys[j];
        for (unsigned i = 0; i <= d; ++i) {
          const auto& terms = lq.k_coeffs.at(r)[i].terms();
          const auto it = terms.find(symbol);
          ok = ok && fit.coeff(i) == (it == terms.end() ? Rational(0) : it->second);
        }
        tally.check(ok, [&] { return where + " chi(" + std::to_string(symbol) + "): interpolation disagrees"; });
      }
      for (unsigned i = 0; i <= d; ++i) {
        const Integer scale = 12 * pow(Integer(q), i + 2);
        tally.check(lq.n_coeffs.at(r)[i].scaled_integral(scale),
                    [&] { return where + ": n-form coefficient " + std::to_string(i) + " outside 1/(12q^(i+2))"; });
      }
    }
  } catch (const std::exception& e) {
    tally.check(false, [&] { return std::string("order-4 character: ") + e.what(); });
  }
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

// A9: norm invariance on the presets; the CLI refuses the adversarial family.
CriterionResult a9(Context& ctx) {
  Tally tally;
  for (const auto& family : ctx.families()) {
    for (std::int64_t q : ctx.options().qs) {
      if (q > 5) continue;
      for (std::int64_t r = 0; r < q; ++r) {
        for (const RayLabel& label : nonzero_labels(q)) {
          tally.check(norm_invariance_check(*family, label, q, r, ctx.options().ks), [&] {
            return family->spec().name + " q=" + std::to_string(q) + " r=" + std::to_string(r) + " " +
                   label.to_string();
          });
        }
      }
    }
  }

  const Family adversarial(preset("adversarial"));
  bool violated = false;
  for (std::int64_t r = 0; r < 2 && !violated; ++r) {
    for (const RayLabel& label : nonzero_labels(2)) {
      violated = violated || !norm_invariance_check(adversarial, label, 2, r, ctx.options().ks);
    }
  }
  tally.check(violated, [] { return "adversarial family passes the norm check"; });

  std::ostringstream out;
  std::ostringstream err;
  const int code = run_app({"family", "--preset", "adversarial", "--q", "2"}, out, err);
  tally.check(code == 3, [&] { return "family --preset adversarial exited " + std::to_string(code); });
  bool failure_row = false;
  bool leaked = false;
  try {
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    for (const auto& row : doc.at("rows")) {
      if (row.at("status") == "hypothesis-violated") {
        failure_row = true;
        leaked = leaked || row.contains("k_form") || row.contains("n_form");
      }
    }
  } catch (const std::exception&) {
    failure_row = false;
  }
  tally.check(failure_row && !leaked, [] { return "no clean hypothesis-violated row in the report"; });
  return CriterionResult{"", "", tally.pass(), tally.detail(), 0.0};
}

struct Criterion {
  const char* id;
  const char* title;
  CriterionResult (*run)(Context&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"A1", "rd-n2p2 continued fraction and unit", a1},
      {"A2", "quartic-16n4 continued fraction and unit", a2},
      {"A3", "Yamamoto sequence equals direct lattice solve", a3},
      {"A4", "orbit recursions, orbit length, periodicity in n", a4},
      {"A5", "closed-form quasi-polynomials equal exact fits", a5},
      {"A6", "denominator bounds", a6},
      {"A7", "k-form/n-form round trips", a7},
      {"A8", "L-value assembly", a8},
      {"A9", "hypothesis tripwires", a9},
  };
  return all;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> out;
  for (const Criterion& c : criteria()) out.emplace_back(c.id);
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, const std::vector<std::string>& only) {
  const std::vector<std::string> ids = criterion_ids();
  for (const std::string& id : only) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw ConfigError("unknown criterion '" + id + "'");
  }
  for (std::int64_t q : options.qs) {
    if (q < 2) throw ConfigError("verify needs q >= 2, got " + std::to_string(q));
  }
  if (options.ks.size() < 2) throw ConfigError("verify needs at least two k values");

  Context ctx(options);
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = c.run(ctx);
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("aborted: ") + e.what();
    }
    res.id = c.id;
    res.title = c.title;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace rayzeta::cli
