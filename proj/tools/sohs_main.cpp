// Command-line front end: certify, verify, bench, filter.
//
// Exit codes, shared across commands:
//   0  success
//   1  unreadable input, parse error, or invalid parameters
//   2  input not positive on the circle / certificate rejected
//   3  precision budget exhausted or the solver stalled
//   4  rounded filter matrices lost positive semidefiniteness
//   5  filter constraints infeasible
//   6  writer refused: certificate failed its pre-write verification

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sohs/certify.hpp"
#include "sohs/errors.hpp"
#include "sohs/filter.hpp"
#include "sohs/poly.hpp"
#include "sohs/rational.hpp"
#include "sohs/serialize.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sohs::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path);
}

sohs::Rational parse_ratio(const std::string& s) {
  try {
    sohs::Rational r(s);
    if (r.get_den() == 0) throw sohs::ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw sohs::ParseError("not a rational: " + s);
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Benchmark family: constant 10d with every off-center coefficient 1 - i,
// positive on the circle since each pair z^-k + z^k is at least -2.
sohs::TrigPoly gauss_family(int d) {
  std::vector<sohs::GaussianRational> c(
      static_cast<std::size_t>(d), sohs::GaussianRational(sohs::Rational(1), sohs::Rational(-1)));
  return sohs::TrigPoly(sohs::Rational(10 * d), std::move(c));
}

struct CliState {
  std::uint64_t seed = 1;
  unsigned max_bits = 1u << 20;
  bool verbose = false;

  // certify
  std::string cert_input;
  std::string cert_alg = "roots";
  std::string cert_out;
  unsigned cert_delta = 16;
  bool inject_fault = false;

  // verify
  std::string ver_poly;
  std::string ver_cert;

  // bench
  std::string bench_family = "gauss";
  int bench_dmax = 250;
  std::vector<int> bench_grid;
  std::vector<std::string> bench_algs{"csos1", "csos2", "csos3"};
  std::string bench_csv;

  // filter
  int flt_d = 25;
  std::string flt_wp, flt_ws, flt_gp, flt_gs;
  unsigned flt_bits = 128;
  std::string flt_out;
};

int cmd_certify(const CliState& st) {
  sohs::TrigPoly f = sohs::trig_from_any(read_file(st.cert_input));

  sohs::SohsCertificate cert;
  if (st.cert_alg == "roots")
    cert = sohs::csos1(f, st.cert_delta, st.seed, st.max_bits);
  else if (st.cert_alg == "sdp")
    cert = sohs::csos2(f, st.cert_delta, st.max_bits);
  else
    cert = sohs::csos3(f, st.cert_delta, st.max_bits);

  if (st.inject_fault) {
    // Test hook: corrupt the certificate after production so the write gate
    // below is exercised.  Each mutation breaks the exact identity.
    if (cert.kind == sohs::CertKind::projected && !cert.weights.empty())
      cert.weights[0] = -cert.weights[0];
    else
      cert.epsilon += 1;
  }

  // Nothing reaches disk or stdout without passing the exact verifier.
  sohs::VerifyResult gate = sohs::verify(f, cert, st.max_bits);
  if (!gate.accepted) {
    std::cerr << "refusing to write: certificate failed verification ("
              << (gate.reason ? to_string(*gate.reason) : "unknown") << ")\n";
    return 6;
  }

  std::string json = sohs::certificate_to_json(cert);
  if (st.cert_out.empty())
    std::cout << json << "\n";
  else
    write_file(st.cert_out, json);
  std::cerr << "certificate (" << to_string(cert.kind) << ") verified"
            << (st.cert_out.empty() ? "" : ", wrote " + st.cert_out) << "\n";
  return 0;
}

int cmd_verify(const CliState& st) {
  sohs::TrigPoly f = sohs::trig_from_any(read_file(st.ver_poly));
  sohs::SohsCertificate cert =
      sohs::certificate_from_json(read_file(st.ver_cert));
  sohs::VerifyResult res = sohs::verify(f, cert, st.max_bits);
  if (res.accepted) {
    std::cout << "accepted\n";
    return 0;
  }
  std::cout << "rejected: " << (res.reason ? to_string(*res.reason) : "unknown")
            << "\n";
  return 2;
}

int cmd_bench(const CliState& st) {
  if (st.bench_family != "gauss")
    throw std::invalid_argument("unknown family: " + st.bench_family);
  if (st.bench_dmax < 1) throw std::invalid_argument("dmax must be >= 1");
  for (const auto& a : st.bench_algs)
    if (a != "csos1" && a != "csos2" && a != "csos3")
      throw std::invalid_argument("unknown algorithm: " + a);

  std::vector<int> grid = st.bench_grid;
  if (grid.empty()) {
    for (int d : {5, 10, 25, 50, 100, 150, 200, 250})
      if (d <= st.bench_dmax) grid.push_back(d);
  }

  std::ostringstream csv;
  csv << "d,algorithm,t_epsilon,t_u,t_total,verified\n";
  for (int d : grid) {
    sohs::TrigPoly f = gauss_family(d);
    for (const auto& alg : st.bench_algs) {
      sohs::CertifyTimers t;
      bool verified = false;
      auto t0 = std::chrono::steady_clock::now();
      try {
        sohs::SohsCertificate cert;
        if (alg == "csos1")
          cert = sohs::csos1(f, 64, st.seed, st.max_bits, &t);
        else if (alg == "csos2")
          cert = sohs::csos2(f, 16, st.max_bits, &t);
        else
          cert = sohs::csos3(f, 16, st.max_bits, &t);
        verified = sohs::verify(f, cert, st.max_bits).accepted;
      } catch (const std::exception& e) {
        std::cerr << "d=" << d << " " << alg << " failed: " << e.what() << "\n";
      }
      double total = seconds_since(t0);
      char row[160];
      std::snprintf(row, sizeof row, "%d,%s,%.3f,%.3f,%.3f,%s\n", d,
                    alg.c_str(), t.t_epsilon, t.t_u, total,
                    verified ? "true" : "false");
      csv << row;
      if (st.verbose)
        std::cerr << "d=" << d << " " << alg << " " << (verified ? "ok" : "FAILED")
                  << " (" << total << "s)\n";
    }
  }

  if (st.bench_csv.empty())
    std::cout << csv.str();
  else
    write_file(st.bench_csv, csv.str());
  return 0;
}

int cmd_filter(const CliState& st) {
  sohs::FilterSpec spec;
  spec.d = st.flt_d;
  spec.omega_p = parse_ratio(st.flt_wp);
  spec.omega_s = parse_ratio(st.flt_ws);
  spec.gamma_p = parse_ratio(st.flt_gp);
  spec.gamma_s = parse_ratio(st.flt_gs);
  spec.spec_bits = st.flt_bits;
  sohs::validate(spec);

  sohs::FilterSdpData data = sohs::build_filter_sdp(spec);
  sohs::FilterCertificate cert = sohs::design_filter(data, st.verbose);
  bool ok = sohs::check_filter_certificate(data, cert);
  std::cout << sohs::filter_report(data, cert);
  if (!st.flt_out.empty()) {
    if (!ok) {
      std::cerr << "refusing to write: certificate failed its exact check\n";
      return 6;
    }
    write_file(st.flt_out, sohs::filter_certificate_to_json(data, cert));
    std::cerr << "wrote " << st.flt_out << "\n";
  }
  return ok ? 0 : 2;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const sohs::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const sohs::NotPositiveOnCircle& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const sohs::PrecisionExhausted& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const sohs::SolverStalled& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const sohs::IterationCap& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const sohs::PairingFailed& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const sohs::ProjectionBrokePsd& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const sohs::Infeasible& e) {
    std::cerr << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positivity certificates for trigonometric polynomials"};
  app.require_subcommand(1);

  CliState st;
  app.add_option("--seed", st.seed, "seed for root-finder perturbations");
  app.add_option("--max-bits", st.max_bits, "precision ceiling in bits");
  app.add_flag("--verbose", st.verbose, "trace solver progress");

  CLI::App* certify =
      app.add_subcommand("certify", "produce a positivity certificate");
  certify->add_option("input", st.cert_input, "polynomial file (text or JSON)")
      ->required();
  certify->add_option("--alg", st.cert_alg, "certification path")
      ->check(CLI::IsMember({"roots", "sdp", "project"}));
  certify->add_option("--out", st.cert_out, "certificate output file");
  certify->add_option("--delta", st.cert_delta, "starting precision in bits");
  certify->add_flag("--inject-fault", st.inject_fault)->group("");

  CLI::App* verify =
      app.add_subcommand("verify", "check a certificate against a polynomial");
  verify->add_option("poly", st.ver_poly, "polynomial file")->required();
  verify->add_option("cert", st.ver_cert, "certificate JSON file")->required();

  CLI::App* bench =
      app.add_subcommand("bench", "time the three certification paths");
  bench->add_option("--family", st.bench_family, "instance family");
  bench->add_option("--dmax", st.bench_dmax, "largest degree to run");
  bench->add_option("--grid", st.bench_grid, "explicit degree grid")
      ->delimiter(',');
  bench->add_option("--algs", st.bench_algs, "algorithms to run")
      ->delimiter(',');
  bench->add_option("--csv", st.bench_csv, "CSV output file");

  CLI::App* filter =
      app.add_subcommand("filter", "design a certified linear-phase FIR filter");
  filter->add_option("--d", st.flt_d, "filter order");
  filter->add_option("--wp", st.flt_wp, "passband edge as a fraction of pi")
      ->required();
  filter->add_option("--ws", st.flt_ws, "stopband edge as a fraction of pi")
      ->required();
  filter->add_option("--gp", st.flt_gp, "passband ripple bound")->required();
  filter->add_option("--gs", st.flt_gs, "stopband level bound")->required();
  filter->add_option("--bits", st.flt_bits, "trig rationalization precision");
  filter->add_option("--out", st.flt_out, "certificate JSON output file");

  CLI11_PARSE(app, argc, argv);

  if (certify->parsed()) return guarded([&] { return cmd_certify(st); });
  if (verify->parsed()) return guarded([&] { return cmd_verify(st); });
  if (bench->parsed()) return guarded([&] { return cmd_bench(st); });
  return guarded([&] { return cmd_filter(st); });
}
