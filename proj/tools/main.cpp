#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "siegelscan/analytic.hpp"
#include "siegelscan/io.hpp"

using json = nlohmann::json;
using namespace siegelscan;

namespace {

constexpr long kDefaultTraceBound = 30;
constexpr long kDefaultEllipticPrec = 2000;
constexpr long kDefaultJacobiPrec = 30;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

JacobiExpansion make_jacobi(const std::string& form, long prec) {
  if (form == "phi10") return jacobi_cusp_phi(10, prec);
  if (form == "phi12") return jacobi_cusp_phi(12, prec);
  throw UsageError("expected a Jacobi form reference (phi10 | phi12), got: " + form);
}

SiegelExpansion make_siegel(const std::string& form, long trace_bound) {
  if (form.rfind("lift:", 0) != 0) {
    throw UsageError("expected a Siegel form reference (lift:phi10 | lift:phi12), got: " + form);
  }
  long phi_prec = trace_bound * trace_bound / 4;
  JacobiExpansion phi = make_jacobi(form.substr(5), phi_prec);
  return maass_lift(phi, trace_bound);
}

NewformSpec make_newform(const std::string& form) {
  if (form.rfind("newform:", 0) != 0) {
    throw UsageError("expected a newform reference (newform:<label>), got: " + form);
  }
  return newform_catalog(form.substr(8));
}

QExpansion make_qexp(const std::string& form, long prec) {
  if (form.rfind("newform:", 0) == 0) return make_newform(form).expansion(prec);
  if (form.rfind("eta:", 0) == 0) {
    return eta_quotient(EtaQuotientSpec::parse(form.substr(4)), prec);
  }
  throw UsageError("expected an elliptic form reference (newform:<label> | eta:<spec>), got: " +
                   form);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

json matrix_json(const std::optional<HalfIntMatrix>& t) {
  if (!t) return nullptr;
  return json::array({t->n, t->r, t->m});
}

json scan_json(const SignChangeReport& r) {
  json j;
  j["interval"] = json::array({r.interval_lo, r.interval_hi});
  j["t_plus"] = matrix_json(r.t_plus);
  j["t_minus"] = matrix_json(r.t_minus);
  j["positives"] = r.positives;
  j["negatives"] = r.negatives;
  return j;
}

std::string render_scan(const SignChangeReport& r, const std::string& format) {
  if (format == "json") return scan_json(r).dump() + "\n";
  std::ostringstream out;
  out << "interval (" << r.interval_lo << ", " << r.interval_hi << "]\n";
  out << "positives " << r.positives << "\n";
  out << "negatives " << r.negatives << "\n";
  auto line = [&](const char* name, const std::optional<HalfIntMatrix>& t) {
    out << name << "    ";
    if (t) {
      out << "(" << t->n << ", " << t->r << ", " << t->m << ")";
    } else {
      out << "absent";
    }
    out << "\n";
  };
  line("t_plus", r.t_plus);
  line("t_minus", r.t_minus);
  return out.str();
}

std::string render_rs(const PartialSumReport& r, const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "x,raw,log,log2,main_term,slope\n"
        << r.x << ',' << fmt(r.raw_sum) << ',' << fmt(r.smoothed_log) << ','
        << fmt(r.smoothed_log2) << ',' << fmt(r.main_term) << ','
        << fmt(r.normalized_slope) << "\n";
    return out.str();
  }
  json j;
  j["x"] = r.x;
  j["raw"] = r.raw_sum;
  j["log"] = r.smoothed_log;
  j["log2"] = r.smoothed_log2;
  j["main_term"] = r.main_term;
  j["slope"] = r.normalized_slope;
  if (format == "json") return j.dump() + "\n";
  std::ostringstream out;
  out << "x          " << r.x << "\n"
      << "raw        " << fmt(r.raw_sum) << "\n"
      << "log        " << fmt(r.smoothed_log) << "\n"
      << "log2       " << fmt(r.smoothed_log2) << "\n"
      << "main_term  " << fmt(r.main_term) << "\n"
      << "slope      " << fmt(r.normalized_slope) << "\n";
  return out.str();
}

int dispatch(int argc, char** argv) {
  CLI::App app{"sign-change experiments for Siegel, Jacobi and elliptic cusp forms"};
  app.require_subcommand(1);

  std::string form, name, format = "text", out_path;
  long x = 0, h = 0, m = 1, nu = -1, n_level = 1, k = 0, prec = -1;
  std::vector<std::string> const_overrides;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out_path);
    cmd->add_option("--prec", prec);
  };

  CLI::App* lift = app.add_subcommand("lift", "Maass lift of an index-1 Jacobi cusp form");
  lift->add_option("--form", form)->required();
  add_common(lift);

  CLI::App* slice = app.add_subcommand("slice", "Fourier-Jacobi slice of a Siegel form");
  slice->add_option("--form", form)->required();
  slice->add_option("--m", m);
  add_common(slice);

  CLI::App* taylor = app.add_subcommand("taylor", "Taylor coefficients of a Jacobi form");
  taylor->add_option("--form", form)->required();
  taylor->add_option("--nu", nu);
  add_common(taylor);

  CLI::App* scan = app.add_subcommand("scan", "scan signs in the trace interval (x, x+h]");
  scan->set_help_flag("--help", "print this help message and exit");  // frees --h
  scan->add_option("--form", form)->required();
  scan->add_option("--x", x)->required();
  scan->add_option("--h", h)->required();
  add_common(scan);

  CLI::App* first = app.add_subcommand("first-change", "first sign change of a Siegel form");
  first->add_option("--form", form)->required();
  add_common(first);

  CLI::App* count = app.add_subcommand("count", "count signs in the trace interval (x, 2x]");
  count->add_option("--form", form)->required();
  count->add_option("--x", x)->required();
  add_common(count);

  CLI::App* rs = app.add_subcommand("rs-sum", "Rankin-Selberg partial sums");
  rs->add_option("--form", form)->required();
  rs->add_option("--x", x)->required();
  rs->add_option("--name", name)->default_val("square_raw");
  add_common(rs);

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate an explicit bound formula");
  bounds->add_option("--name", name)->required();
  bounds->add_option("--N", n_level);
  bounds->add_option("--k", k);
  bounds->add_option("--m", m);  // the ell parameter of phi_ell
  bounds->add_option("--const", const_overrides);
  add_common(bounds);

  CLI::App* deligne = app.add_subcommand("deligne", "Deligne bound check for a newform");
  deligne->add_option("--form", form)->required();
  deligne->add_option("--x", x)->required();
  add_common(deligne);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  }

  if (lift->parsed()) {
    std::string base = form.rfind("lift:", 0) == 0 ? form.substr(5) : form;
    SiegelExpansion f = make_siegel("lift:" + base, prec < 0 ? kDefaultTraceBound : prec);
    std::ostringstream buf;
    write_siegel(buf, f);
    emit(buf.str(), out_path);
    return 0;
  }

  if (slice->parsed()) {
    SiegelExpansion f = make_siegel(form, prec < 0 ? kDefaultTraceBound : prec);
    JacobiExpansion phi = fourier_jacobi_slice(f, m);
    std::ostringstream buf;
    write_jacobi(buf, phi);
    emit(buf.str(), out_path);
    return 0;
  }

  if (taylor->parsed()) {
    JacobiExpansion phi = make_jacobi(form, prec < 0 ? kDefaultJacobiPrec : prec);
    if (nu >= 0) {
      std::ostringstream buf;
      write_qexp(buf, taylor_coefficient(phi, nu));
      emit(buf.str(), out_path);
      return 0;
    }
    TaylorReport report = first_nonzero_taylor_index(phi);
    json j;
    j["alpha"] = report.alpha;
    j["alpha_bound"] = report.alpha_bound;
    j["i_alpha_sign"] = report.i_alpha_sign;
    j["chi_alpha_q1"] = rational_to_string(report.chi_alpha_normalized.coeff(1));
    if (format == "json") {
      emit(j.dump() + "\n", out_path);
    } else {
      std::ostringstream buf;
      buf << "alpha        " << report.alpha << "\n"
          << "alpha_bound  " << report.alpha_bound << "\n"
          << "i_alpha_sign " << report.i_alpha_sign << "\n"
          << "chi_alpha_q1 " << rational_to_string(report.chi_alpha_normalized.coeff(1)) << "\n";
      emit(buf.str(), out_path);
    }
    return 0;
  }

  if (scan->parsed()) {
    SiegelExpansion f = make_siegel(form, prec < 0 ? kDefaultTraceBound : prec);
    emit(render_scan(scan_signs(f, x, h), format), out_path);
    return 0;
  }

  if (first->parsed()) {
    SiegelExpansion f = make_siegel(form, prec < 0 ? kDefaultTraceBound : prec);
    FirstSignChange fc = first_sign_change(f);
    if (format == "json") {
      json j;
      j["t1"] = json::array({fc.t1.n, fc.t1.r, fc.t1.m});
      j["t2"] = json::array({fc.t2.n, fc.t2.r, fc.t2.m});
      j["max_trace"] = fc.max_trace;
      emit(j.dump() + "\n", out_path);
    } else {
      std::ostringstream buf;
      buf << "t1        (" << fc.t1.n << ", " << fc.t1.r << ", " << fc.t1.m << ")\n"
          << "t2        (" << fc.t2.n << ", " << fc.t2.r << ", " << fc.t2.m << ")\n"
          << "max_trace " << fc.max_trace << "\n";
      emit(buf.str(), out_path);
    }
    return 0;
  }

  if (count->parsed()) {
    SiegelExpansion f = make_siegel(form, prec < 0 ? kDefaultTraceBound : prec);
    auto [pos, neg] = count_signs_interval(f, x);
    if (format == "json") {
      json j;
      j["positives"] = pos;
      j["negatives"] = neg;
      emit(j.dump() + "\n", out_path);
    } else {
      emit(std::to_string(pos) + "," + std::to_string(neg) + "\n", out_path);
    }
    return 0;
  }

  if (rs->parsed()) {
    NewformSpec f = make_newform(form);
    long up_to = prec < 0 ? std::max(x, kDefaultEllipticPrec) : prec;
    if (up_to < x) throw std::invalid_argument("rs-sum: --prec below --x");
    std::vector<double> lambda = normalized_coeffs(f, up_to);
    PartialSumReport report = rs_partial_sum(lambda, f.level, x, sum_mode_from_string(name));
    emit(render_rs(report, format), out_path);
    return 0;
  }

  if (bounds->parsed()) {
    BoundParams consts;
    for (const std::string& ov : const_overrides) {
      size_t eq = ov.find('=');
      if (eq == std::string::npos) throw UsageError("--const expects name=value, got: " + ov);
      consts.set(ov.substr(0, eq), std::stod(ov.substr(eq + 1)));
    }
    std::map<std::string, double> params;
    params["N"] = static_cast<double>(n_level);
    if (k > 0) params["k"] = static_cast<double>(k);
    if (bounds->count("--m")) params["ell"] = static_cast<double>(m);
    BoundResult result = evaluate_bound(name, params, consts);
    if (format == "json") {
      json j;
      j["name"] = name;
      j["value"] = result.value;
      j["branch"] = result.branch;
      emit(j.dump() + "\n", out_path);
    } else if (format == "csv") {
      std::ostringstream buf;
      buf << "name,value,branch\n" << name << ',' << fmt(result.value) << ','
          << result.branch << "\n";
      emit(buf.str(), out_path);
    } else {
      std::ostringstream buf;
      buf << result.value;
      std::string text = buf.str();
      if (!result.branch.empty()) text += " (" + result.branch + ")";
      emit(text + "\n", out_path);
    }
    return 0;
  }

  if (deligne->parsed()) {
    NewformSpec f = make_newform(form);
    std::vector<long> violations = deligne_check(f, x);
    if (format == "json") {
      json j;
      j["up_to"] = x;
      j["violations"] = violations;
      emit(j.dump() + "\n", out_path);
    } else {
      std::ostringstream buf;
      buf << violations.size() << " violations";
      for (long n : violations) buf << ' ' << n;
      buf << "\n";
      emit(buf.str(), out_path);
    }
    return 0;
  }

  throw UsageError("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << std::endl;
    return 1;
  }
}
