#include "commands.hpp"

#include "acceptance.hpp"
#include "rayzeta/error.hpp"

#include <algorithm>
#include <set>

namespace rayzeta::cli {
namespace {

using nlohmann::json;

std::string str(std::int64_t x) { return std::to_string(x); }

json rationals(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const Rational& x : xs) out.push_back(to_string(x));
  return out;
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const Rational& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> label_strings(const std::vector<RayLabel>& labels) {
  std::vector<std::string> out;
  for (const RayLabel& l : labels) out.push_back(l.to_string());
  return out;
}

std::vector<std::string> cf_strings(const std::vector<Integer>& terms) {
  std::vector<std::string> out;
  for (const Integer& t : terms) out.push_back(to_string(t));
  return out;
}

json family_json(const FamilySpec& spec) {
  json a = json::array();
  for (const Polynomial& p : spec.a) a.push_back(p.to_string());
  return json{{"name", spec.name},
              {"f", spec.f.to_string()},
              {"a", a},
              {"degree", str(spec.degree())},
              {"n_min", str(spec.n_min)},
              {"n_max", str(spec.n_max)}};
}

void require_label_range(const RayLabel& label, std::int64_t q) {
  if (label.c < 0 || label.c >= q || label.d < 0 || label.d >= q) {
    throw ConfigError("label " + label.to_string() + " must have coordinates in [0, " + str(q - 1) + "]");
  }
  if (label.c == 0 && label.d == 0) throw ConfigError("label (0,0) is not a ray class label");
}

// One field to evaluate: a family member or a field given by its radicand.
struct FieldItem {
  std::optional<std::int64_t> n;
  Integer radicand;
  std::shared_ptr<const FamilyInstance> instance;
  std::shared_ptr<const ShintaniField> own;

  const ShintaniField& field() const { return instance ? instance->field : *own; }
};

std::vector<FieldItem> resolve_fields(const RunConfig& config, Report& report) {
  const std::optional<FamilySpec> spec = family_from_config(config);
  if (config.radicand) {
    if (spec) throw ConfigError("give either --radicand or a family, not both");
    if (config.n) throw ConfigError("--n applies to families, not to --radicand");
    Integer radicand;
    try {
      radicand = Integer(*config.radicand);
    } catch (const std::exception&) {
      throw ConfigError("radicand must be an integer, got '" + *config.radicand + "'");
    }
    if (radicand < 2 || is_square(radicand) || !is_squarefree(radicand)) {
      throw ConfigError("radicand must be a squarefree integer > 1, got " + to_string(radicand));
    }
    const QuadField field(radicand);
    FieldItem item;
    item.radicand = radicand;
    item.own = std::make_shared<ShintaniField>(ModuleBasis(field.ring_delta()));
    return {item};
  }
  if (!spec) throw ConfigError("give a family (--preset or --f-poly/--a-polys) or --radicand");
  if (!config.n) throw ConfigError("--n is required with a family");
  const Family family(*spec);
  std::vector<FieldItem> out;
  json skipped = json::array();
  for (std::int64_t n = config.n->first; n <= config.n->second; ++n) {
    std::string reason;
    auto inst = family.instance(n, &reason);
    if (!inst) {
      skipped.push_back(json{{"n", str(n)}, {"reason", reason}});
      report.warnings.push_back("skipping " + reason);
      continue;
    }
    FieldItem item;
    item.n = n;
    item.radicand = inst->radicand;
    item.instance = std::move(inst);
    out.push_back(std::move(item));
  }
  report.json["family"] = family_json(*spec);
  report.json["skipped"] = skipped;
  report.json["skipped_count"] = str(static_cast<std::int64_t>(skipped.size()));
  return out;
}

json field_json(const FieldItem& item, std::int64_t q) {
  const ShintaniField& field = item.field();
  json out{{"radicand", to_string(item.radicand)},
           {"delta", field.basis().delta().to_string()},
           {"unit", field.eps().to_string()},
           {"minus_cf", cf_strings(field.minus().terms)},
           {"m", str(static_cast<std::int64_t>(field.m()))},
           {"lambda", str(field.lambda(q))}};
  if (item.n) out["n"] = str(*item.n);
  return out;
}

json approx_complex(std::complex<double> z, int precision) {
  return json{{"re", approx_string(z.real(), precision)}, {"im", approx_string(z.imag(), precision)}};
}

json character_json(const DirichletChar& chi) {
  json table = json::object();
  for (const auto& [a, e] : chi.table()) table[str(a)] = str(e);
  return json{{"modulus", str(chi.modulus())}, {"order", str(chi.order())}, {"exponents", table}};
}

}  // namespace

Report cmd_zeta(const RunConfig& config) {
  Report report;
  const std::int64_t q = single_q(config);
  if (q < 2) throw ConfigError("q must be >= 2, got " + str(q));
  if (config.label) require_label_range(*config.label, q);
  report.json["command"] = "zeta";
  report.json["q"] = str(q);
  report.columns = {"n", "radicand", "q", "label", "value", "orbit", "lambda", "m", "minus_cf"};
  json fields = json::array();
  for (const FieldItem& item : resolve_fields(config, report)) {
    const ShintaniField& field = item.field();
    json fj = field_json(item, q);
    json labels = json::array();
    std::vector<RayLabel> todo = f_delta(field.basis(), q);
    if (config.label) {
      if (!in_f_delta(field.basis(), q, *config.label)) {
        throw ConfigError("label " + config.label->to_string() + " is not in F_delta for radicand " +
                          to_string(item.radicand));
      }
      todo = {*config.label};
    }
    for (const RayLabel& label : todo) {
      const Rational value = partial_zeta0(label, field, q);
      const std::vector<RayLabel> orb = orbit(label, field.unit(), q);
      labels.push_back(json{{"label", label.to_string()},
                            {"value", to_string(value)},
                            {"approx_value", approx_string(value.convert_to<double>(), config.precision)},
                            {"orbit", label_strings(orb)}});
      report.rows.push_back({item.n ? str(*item.n) : "", to_string(item.radicand), str(q), label.to_string(),
                             to_string(value), joined(label_strings(orb), " "), str(field.lambda(q)),
                             str(static_cast<std::int64_t>(field.m())), joined(cf_strings(field.minus().terms), " ")});
    }
    fj["labels"] = labels;
    fields.push_back(fj);
  }
  report.json["fields"] = fields;
  return report;
}

Report cmd_family(const RunConfig& config) {
  Report report;
  const std::optional<FamilySpec> spec = family_from_config(config);
  if (!spec) throw ConfigError("family needs --preset or --f-poly/--a-polys");
  if (config.radicand || config.n) throw ConfigError("family samples n = qk + r over --k-range; --n and --radicand do not apply");
  const std::int64_t q = single_q(config);
  if (q < 2) throw ConfigError("q must be >= 2, got " + str(q));
  if (config.label) require_label_range(*config.label, q);
  const std::vector<std::int64_t> ks = k_values(config);
  const Family family(*spec);
  const unsigned d = spec->degree();

  report.json["command"] = "family";
  report.json["family"] = family_json(*spec);
  report.json["q"] = str(q);
  report.json["k_range"] = str(ks.front()) + ":" + str(ks.back());
  report.columns = {"r", "label", "status", "oracle", "denominators_ok", "formula", "orbit", "k_form", "n_form",
                    "reason"};

  std::vector<RayLabel> labels;
  if (config.label) {
    labels.push_back(*config.label);
  } else {
    for (std::int64_t c = 0; c < q; ++c) {
      for (std::int64_t dd = 0; dd < q; ++dd) {
        if (c != 0 || dd != 0) labels.push_back(RayLabel{c, dd});
      }
    }
  }

  json rows = json::array();
  std::map<std::string, std::int64_t> counts;
  for (std::int64_t r = 0; r < q; ++r) {
    for (const RayLabel& label : labels) {
      json row{{"r", str(r)}, {"label", label.to_string()}};
      std::vector<std::string> csv{str(r), label.to_string(), "", "", "", "", "", "", "", ""};
      const auto finish = [&](const std::string& status, const std::string& reason) {
        row["status"] = status;
        csv[2] = status;
        if (!reason.empty()) {
          row["reason"] = reason;
          csv[9] = reason;
        }
        ++counts[status];
        rows.push_back(row);
        report.rows.push_back(csv);
      };

      if (!norm_invariance_check(family, label, q, r, ks)) {
        report.raise_exit(3);
        finish("hypothesis-violated", "N((C + D delta(n)) b_n) mod q depends on k");
        continue;
      }
      std::vector<std::int64_t> usable;
      std::vector<std::int64_t> unusable;
      for (std::int64_t k : ks) {
        const auto inst = family.instance(q * k + r);
        (inst && in_f_delta(inst->field.basis(), q, label) ? usable : unusable).push_back(k);
      }
      if (usable.empty()) {
        finish("excluded", "label not in F_delta at any sampled n");
        continue;
      }
      if (usable.size() < 2) {
        finish("insufficient-samples", "one usable k");
        continue;
      }

      QuasiPolyResult qp;
      try {
        qp = quasi_poly(family, label, q, r, ks);
      } catch (const HypothesisError& e) {
        report.raise_exit(3);
        finish("hypothesis-violated", e.what());
        continue;
      } catch (const VerificationError& e) {
        report.raise_exit(4);
        finish("verification-failed", e.what());
        continue;
      }

      std::string oracle = "insufficient-samples";
      if (usable.size() >= d + 2) {
        const FitResult fit = fit_oracle(family, label, q, r, ks);
        oracle = fit.consistent && fit.coeffs == qp.coeffs ? "ok" : "mismatch";
        if (oracle == "mismatch") row["oracle_fit"] = rationals(fit.coeffs);
      }

      QuasiPoly k_form{q, d, QuasiForm::k_form, {}};
      k_form.coeffs.emplace(r, qp.coeffs);
      const QuasiPoly n_form = k_to_n_form(k_form);
      const Rational scale = 12 * q * q;
      bool members_ok = true;
      json members = json::object();
      for (const auto& [member, coeffs] : qp.member_coeffs) {
        for (const Rational& b : coeffs) members_ok = members_ok && is_integer(scale * b);
        members[member.to_string()] = rationals(coeffs);
      }
      const bool denominators_ok = members_ok && n_form_denominators_ok(n_form);

      row["oracle"] = oracle;
      row["denominators_ok"] = denominators_ok;
      row["formula"] = to_string(qp.formula);
      row["orbit"] = label_strings(qp.orbit);
      row["k_form"] = rationals(qp.coeffs);
      row["n_form"] = rationals(n_form.coeffs.at(r));
      row["member_coeffs"] = members;
      row["verified_k"] = json::array();
      for (std::int64_t k : qp.verified_k) row["verified_k"].push_back(str(k));
      row["skipped_k"] = json::array();
      for (std::int64_t k : qp.skipped_k) row["skipped_k"].push_back(str(k));
      csv[3] = oracle;
      csv[4] = denominators_ok ? "true" : "false";
      csv[5] = to_string(qp.formula);
      csv[6] = joined(label_strings(qp.orbit), " ");
      csv[7] = joined(rational_strings(qp.coeffs), " ");
      csv[8] = joined(rational_strings(n_form.coeffs.at(r)), " ");

      if (oracle == "mismatch") {
        report.raise_exit(4);
        finish("verification-failed", "closed form differs from the interpolation oracle");
      } else if (!denominators_ok) {
        report.raise_exit(4);
        finish("verification-failed", "coefficient denominators exceed 12q^2 resp. 12q^(i+2)");
      } else {
        finish("ok", "");
      }
    }
  }
  report.json["rows"] = rows;
  json summary = json::object();
  for (const auto& [status, count] : counts) summary[status] = str(count);
  report.json["summary"] = summary;
  return report;
}

Report cmd_lfunc(const RunConfig& config) {
  Report report;
  const std::int64_t q = single_q(config);
  const DirichletChar chi = parse_character(config.character.value_or("trivial"), q);
  report.json["command"] = "lfunc";
  report.json["q"] = str(q);
  report.json["character"] = character_json(chi);
  report.json["approx_precision"] = str(config.precision);

  if (config.radicand || config.n) {
    report.columns = {"n", "radicand", "value", "representatives", "approx_re", "approx_im"};
    json fields = json::array();
    for (const FieldItem& item : resolve_fields(config, report)) {
      const LValue l = hecke_L0(item.field(), chi);
      const std::complex<double> z = l.value.render(chi);
      json fj = field_json(item, q);
      fj["value"] = l.value.to_string();
      fj["representatives"] = label_strings(l.representatives);
      fj["approx_value"] = approx_complex(z, config.precision);
      fields.push_back(fj);
      report.rows.push_back({item.n ? str(*item.n) : "", to_string(item.radicand), l.value.to_string(),
                             joined(label_strings(l.representatives), " "), approx_string(z.real(), config.precision),
                             approx_string(z.imag(), config.precision)});
    }
    report.json["fields"] = fields;
    return report;
  }

  const std::optional<FamilySpec> spec = family_from_config(config);
  if (!spec) throw ConfigError("lfunc needs a family, --n or --radicand");
  const std::vector<std::int64_t> ks = k_values(config);
  const Family family(*spec);
  report.json["family"] = family_json(*spec);
  report.json["k_range"] = str(ks.front()) + ":" + str(ks.back());
  report.columns = {"r", "power", "k_coeff", "n_coeff", "denominators_ok", "approx_k_re", "approx_k_im"};

  const CharQuasiPoly lq = hecke_L0_family(family, chi, ks);
  json rows = json::array();
  bool all_ok = true;
  for (const auto& [r, k_coeffs] : lq.k_coeffs) {
    const std::vector<CharSpanValue>& n_coeffs = lq.n_coeffs.at(r);
    json k_json = json::array();
    json n_json = json::array();
    json approx = json::array();
    bool ok = true;
    for (std::size_t i = 0; i < k_coeffs.size(); ++i) {
      const bool coeff_ok = n_coeffs[i].scaled_integral(12 * pow(Integer(q), static_cast<unsigned>(i) + 2));
      ok = ok && coeff_ok;
      k_json.push_back(k_coeffs[i].to_string());
      n_json.push_back(n_coeffs[i].to_string());
      const std::complex<double> z = k_coeffs[i].render(chi);
      approx.push_back(approx_complex(z, config.precision));
      report.rows.push_back({str(r), str(static_cast<std::int64_t>(i)), k_coeffs[i].to_string(),
                             n_coeffs[i].to_string(), coeff_ok ? "true" : "false",
                             approx_string(z.real(), config.precision), approx_string(z.imag(), config.precision)});
    }
    all_ok = all_ok && ok;
    json verified = json::array();
    for (std::int64_t k : lq.verified_k.at(r)) verified.push_back(str(k));
    rows.push_back(json{{"r", str(r)},
                        {"k_form", k_json},
                        {"n_form", n_json},
                        {"approx_k_form", approx},
                        {"denominators_ok", ok},
                        {"verified_k", verified}});
  }
  if (!all_ok) report.raise_exit(4);
  report.json["rows"] = rows;
  return report;
}

Report cmd_verify(const RunConfig& config) {
  AcceptanceOptions options;
  // Extra moduli extend the default set.
  for (std::int64_t q : config.q) {
    if (std::find(options.qs.begin(), options.qs.end(), q) == options.qs.end()) options.qs.push_back(q);
  }
  std::sort(options.qs.begin(), options.qs.end());
  if (config.n_max) {
    if (*config.n_max < 1) throw ConfigError("--n-max must be >= 1");
    options.n_max = *config.n_max;
    options.n_max_quadratic = *config.n_max;
  }
  options.ks.clear();
  for (std::int64_t k = config.k_range.first; k <= config.k_range.second; ++k) options.ks.push_back(k);

  Report report;
  report.json["command"] = "verify";
  json opts{{"n_max", str(options.n_max)},
            {"n_max_quadratic", str(options.n_max_quadratic)},
            {"k_range", str(config.k_range.first) + ":" + str(config.k_range.second)},
            {"seed", std::to_string(options.seed)}};
  opts["q"] = json::array();
  for (std::int64_t q : options.qs) opts["q"].push_back(str(q));
  report.json["options"] = opts;
  report.columns = {"id", "title", "pass", "approx_seconds", "detail"};

  json results = json::array();
  bool all = true;
  for (const CriterionResult& res : run_acceptance(options, config.criteria)) {
    all = all && res.pass;
    const std::string secs = approx_string(res.seconds, 3);
    results.push_back(json{{"id", res.id},
                           {"title", res.title},
                           {"pass", res.pass},
                           {"detail", res.detail},
                           {"approx_seconds", secs}});
    report.rows.push_back({res.id, res.title, res.pass ? "true" : "false", secs, res.detail});
  }
  report.json["criteria"] = results;
  report.json["passed"] = all;
  if (!all) report.raise_exit(4);
  return report;
}

}  // namespace rayzeta::cli
