#include "softbte/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "softbte/errors.hpp"
#include "softbte/weights.hpp"

namespace softbte {
namespace {

using nlohmann::ordered_json;

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json number_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json config_json(const RunConfig& config) {
  ordered_json out = ordered_json::object();
  for (const auto& e : flatten(config)) {
    // Rebuild the nesting of the dotted key.
    ordered_json* node = &out;
    std::size_t start = 0;
    for (std::size_t dot; (dot = e.key.find('.', start)) != std::string::npos; start = dot + 1)
      node = &(*node)[e.key.substr(start, dot - start)];
    ordered_json& leaf = (*node)[e.key.substr(start)];
    switch (e.kind) {
      case ValueKind::kNumber:
        leaf = number_or_null(std::stod(e.value));
        break;
      case ValueKind::kInteger:
        leaf = std::stoll(e.value);
        break;
      case ValueKind::kBoolean:
        leaf = e.value == "true";
        break;
      case ValueKind::kText:
        leaf = e.value;
        break;
      case ValueKind::kNumberList: {
        leaf = ordered_json::array();
        std::size_t pos = 0;
        while (pos < e.value.size()) {
          std::size_t used = 0;
          leaf.push_back(std::stod(e.value.substr(pos), &used));
          pos += used;
          while (pos < e.value.size() && (e.value[pos] == ',' || e.value[pos] == ' ')) ++pos;
        }
        break;
      }
    }
  }
  return out;
}

ordered_json fit_json(const DecayFit& f) {
  return {{"rho_est", number_or_null(f.rho_est)},
          {"lambda", number_or_null(f.lambda)},
          {"a", number_or_null(f.a)},
          {"r2", number_or_null(f.r2)},
          {"rho_theory", number_or_null(f.rho_hint)},
          {"lambda_constrained", number_or_null(f.lambda_constrained)},
          {"a_constrained", number_or_null(f.a_constrained)},
          {"r2_constrained", number_or_null(f.r2_constrained)},
          {"rows_used", f.rows_used},
          {"t_first", f.t_first},
          {"t_last", f.t_last}};
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string fixed(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string tick_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

std::string version() { return SOFTBTE_VERSION; }

std::string timeseries_csv(const TimeSeriesRecord& record) {
  std::string out = "t,h_sup,f_l2,mass,mom_x,mom_y,mom_z,energy,H,rel_entropy,leakage\n";
  for (const auto& r : record.rows) {
    const double cols[] = {r.t, r.h_sup, r.f_l2, r.moments.mass, r.moments.momentum[0], r.moments.momentum[1],
                           r.moments.momentum[2], r.moments.energy, r.H, r.rel_entropy, r.leakage};
    for (std::size_t i = 0; i < std::size(cols); ++i) {
      if (i) out += ',';
      out += g17(cols[i]);
    }
    out += '\n';
  }
  return out;
}

std::optional<DecayFit> try_decay_fit(const TimeSeriesRecord& record, const RunConfig& config, std::string* reason) {
  std::vector<double> t, y;
  for (const auto& r : record.rows) {
    t.push_back(r.t);
    y.push_back(r.h_sup);
  }
  try {
    return decay_fit(t, y, decay_exponent(config.sim.model.gamma, config.sim.weights.vartheta), config.fit_options());
  } catch (const FitDegenerate& e) {
    if (reason) *reason = e.what();
    return std::nullopt;
  }
}

std::string summary_json(const RunConfig& config, const TimeSeriesRecord& record, const std::optional<DecayFit>& fit) {
  ordered_json j;
  j["version"] = version();
  j["config"] = config_json(config);
  j["rows"] = record.rows.size();
  j["unstable"] = record.unstable;
  j["note"] = record.note;
  j["clipped_fraction"] = record.clipped_fraction;
  j["projection_fallbacks"] = record.projection_fallbacks;
  if (!record.rows.empty()) {
    const auto& r = record.rows.back();
    j["final"] = {{"t", r.t},
                  {"h_sup", number_or_null(r.h_sup)},
                  {"f_l2", number_or_null(r.f_l2)},
                  {"mass", r.moments.mass},
                  {"momentum", {r.moments.momentum[0], r.moments.momentum[1], r.moments.momentum[2]}},
                  {"energy", r.moments.energy},
                  {"H", number_or_null(r.H)},
                  {"rel_entropy", number_or_null(r.rel_entropy)},
                  {"leakage", r.leakage},
                  {"split_a", r.split.a},
                  {"split_b", r.split.b}};
  }
  j["decay_fit"] = fit ? fit_json(*fit) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string verify_json(const RunConfig& config, const std::string& suite, std::span<const Certificate> certificates) {
  ordered_json j;
  j["version"] = version();
  j["suite"] = suite;
  j["config"] = config_json(config);
  bool all_pass = !certificates.empty();
  ordered_json certs = ordered_json::array();
  for (const auto& c : certificates) {
    ordered_json constants = ordered_json::object();
    for (const auto& [k, v] : c.constants) constants[k] = number_or_null(v);
    ordered_json notes = ordered_json::object();
    for (const auto& [k, v] : c.notes) notes[k] = v;
    certs.push_back({{"lemma_id", c.lemma_id},
                     {"claim", c.claim},
                     {"fitted_constants", constants},
                     {"train_size", c.train_size},
                     {"holdout_size", c.holdout_size},
                     {"pass_fraction", c.pass_fraction},
                     {"worst_violation", number_or_null(c.worst_violation)},
                     {"verdict", to_string(c.verdict)},
                     {"notes", notes}});
    all_pass = all_pass && c.passed();
  }
  j["all_pass"] = all_pass;
  j["certificates"] = certs;
  return j.dump(2) + "\n";
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
  std::vector<SweepRow> rows;
  for (double gamma : config.sweep.gammas) {
    for (double vartheta : config.sweep.varthetas) {
      SweepRow row;
      row.gamma = gamma;
      row.vartheta = vartheta;
      RunConfig c = config;
      c.sim.model.gamma = gamma;
      c.sim.weights.vartheta = vartheta;
      try {
        c.sim.validate();
      } catch (const ConfigError& e) {
        row.rho_theory = std::nan("");
        row.rho_est = row.lambda = row.r2 = std::nan("");
        row.status = "skipped";
        row.reason = e.what();
        rows.push_back(row);
        continue;
      }
      row.rho_theory = decay_exponent(gamma, vartheta);
      const auto record = simulate(c.sim);
      std::string reason;
      const auto fit = record.unstable ? std::nullopt : try_decay_fit(record, c, &reason);
      if (fit) {
        row.rho_est = fit->rho_est;
        row.lambda = fit->lambda;
        row.r2 = fit->r2;
        row.status = "ok";
      } else {
        row.rho_est = row.lambda = row.r2 = std::nan("");
        row.status = record.unstable ? "unstable" : "fit-degenerate";
        row.reason = record.unstable ? record.note : reason;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  auto num = [](double x) { return std::isfinite(x) ? g17(x) : std::string(); };
  std::string out = "gamma,vartheta,rho_theory,rho_est,lambda,r2,status,reason\n";
  for (const auto& r : rows) {
    out += num(r.gamma) + ',' + num(r.vartheta) + ',' + num(r.rho_theory) + ',' + num(r.rho_est) + ',' + num(r.lambda) +
           ',' + num(r.r2) + ',' + r.status + ',' + (r.reason.empty() ? "" : quote(r.reason)) + '\n';
  }
  return out;
}

std::string render_svg(const Plot& plot, const std::string& timestamp) {
  constexpr double W = 720, H = 440, L = 80, R = 24, T = 40, B = 60;
  constexpr const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  auto transform = [&](double y) { return plot.log_y ? std::log10(y) : y; };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : plot.series)
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]) || (plot.log_y && !(s.y[i] > 0.0))) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, transform(s.y[i]));
      y1 = std::max(y1, transform(s.y[i]));
    }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  if (plot.log_y) y0 = std::floor(y0), y1 = std::ceil(y1);
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"440\" viewBox=\"0 0 720 440\" "
                  "font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"720\" height=\"440\" fill=\"white\"/>\n";
  s += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" + xml_escape(plot.title) + "</text>\n";
  s += "<rect x=\"" + fixed(L, 1) + "\" y=\"" + fixed(T, 1) + "\" width=\"" + fixed(W - L - R, 1) + "\" height=\"" +
       fixed(H - T - B, 1) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 5; ++k) {
    const double x = x0 + (x1 - x0) * k / 5.0;
    s += "<text x=\"" + fixed(px(x), 1) + "\" y=\"" + fixed(H - B + 18, 1) + "\" text-anchor=\"middle\">" + tick_label(x) +
         "</text>\n";
  }
  const int ny = plot.log_y ? std::max(1, static_cast<int>(y1 - y0)) : 5;
  const int stride = plot.log_y ? std::max(1, ny / 8) : 1;
  for (int k = 0; k <= ny; k += stride) {
    const double y = y0 + (y1 - y0) * k / ny;
    const std::string label = plot.log_y ? "1e" + std::to_string(static_cast<int>(std::lround(y))) : tick_label(y);
    s += "<line x1=\"" + fixed(L, 1) + "\" x2=\"" + fixed(W - R, 1) + "\" y1=\"" + fixed(py(y), 1) + "\" y2=\"" +
         fixed(py(y), 1) + "\" stroke=\"#dddddd\"/>\n";
    s += "<text x=\"" + fixed(L - 6, 1) + "\" y=\"" + fixed(py(y) + 4, 1) + "\" text-anchor=\"end\">" + label + "</text>\n";
  }
  s += "<text x=\"" + fixed(L + (W - L - R) / 2, 1) + "\" y=\"" + fixed(H - 20, 1) + "\" text-anchor=\"middle\">" +
       xml_escape(plot.x_label) + "</text>\n";
  s += "<text x=\"18\" y=\"" + fixed(T + (H - T - B) / 2, 1) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       fixed(T + (H - T - B) / 2, 1) + ")\">" + xml_escape(plot.y_label) + "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& ser = plot.series[k];
    const char* color = colors[k % std::size(colors)];
    std::string points;
    for (std::size_t i = 0; i < std::min(ser.x.size(), ser.y.size()); ++i) {
      if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i]) || (plot.log_y && !(ser.y[i] > 0.0))) continue;
      points += fixed(px(ser.x[i]), 2) + "," + fixed(py(transform(ser.y[i])), 2) + " ";
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"" +
         (ser.dashed ? " stroke-dasharray=\"6 4\"" : "") + " points=\"" + points + "\"/>\n";
    const double ly = T + 16 + 16 * static_cast<double>(k);
    s += "<line x1=\"" + fixed(W - R - 150, 1) + "\" x2=\"" + fixed(W - R - 126, 1) + "\" y1=\"" + fixed(ly - 4, 1) +
         "\" y2=\"" + fixed(ly - 4, 1) + "\" stroke=\"" + color + "\"" + (ser.dashed ? " stroke-dasharray=\"6 4\"" : "") +
         "/>\n";
    s += "<text x=\"" + fixed(W - R - 120, 1) + "\" y=\"" + fixed(ly, 1) + "\">" + xml_escape(ser.name) + "</text>\n";
  }
  if (!timestamp.empty())
    s += "<text x=\"" + fixed(W - 6, 1) + "\" y=\"" + fixed(H - 6, 1) + "\" text-anchor=\"end\" font-size=\"9\" fill=\"#888888\">" +
         xml_escape(timestamp) + "</text>\n";
  s += "</svg>\n";
  return s;
}

std::vector<std::pair<std::string, Plot>> simulation_plots(const TimeSeriesRecord& record, const std::optional<DecayFit>& fit) {
  std::vector<double> t, h, l2, ent;
  for (const auto& r : record.rows) {
    t.push_back(r.t);
    h.push_back(r.h_sup);
    l2.push_back(r.f_l2);
    ent.push_back(r.rel_entropy);
  }
  Plot norms{"Perturbation norms", "t", "norm", true, {{"sup |h|", t, h, false}, {"||f||_2", t, l2, false}}};
  Plot entropy{"Relative entropy", "t", "E(F)", false, {{"E(F(t))", t, ent, false}}};
  Plot overlay{"Decay fit of sup |h|", "t", "sup |h|", true, {{"sup |h|", t, h, false}}};
  if (fit) {
    std::vector<double> ft, free_fit, rho_fit;
    for (double x : t) {
      if (x < fit->t_first) continue;
      ft.push_back(x);
      free_fit.push_back(std::exp(fit->a - fit->lambda * std::pow(x, fit->rho_est)));
      rho_fit.push_back(std::exp(fit->a_constrained - fit->lambda_constrained * std::pow(x, fit->rho_hint)));
    }
    overlay.series.push_back({"fit rho = " + tick_label(fit->rho_est), ft, free_fit, true});
    overlay.series.push_back({"fit rho = " + tick_label(fit->rho_hint) + " (theory)", ft, rho_fit, true});
  }
  return {{"norms.svg", norms}, {"entropy.svg", entropy}, {"decay_fit.svg", overlay}};
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace softbte
