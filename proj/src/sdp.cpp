#include "sohs/sdp.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <iostream>
#include <limits>
#include <vector>

#include "sohs/errors.hpp"

namespace sohs_sdp_scalars {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>,
                                           boost::multiprecision::et_off>;
using ExtraWide =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<128>,
                                  boost::multiprecision::et_off>;

}  // namespace sohs_sdp_scalars

// The bundled multiprecision NumTraits bindings predate Eigen's hypot
// support; full specializations add the missing infinity/quiet_NaN members.
namespace Eigen {

template <>
struct NumTraits<sohs_sdp_scalars::Quad> : GenericNumTraits<sohs_sdp_scalars::Quad> {
  static inline sohs_sdp_scalars::Quad dummy_precision() {
    return std::numeric_limits<sohs_sdp_scalars::Quad>::epsilon() * 1024;
  }
};

template <>
struct NumTraits<sohs_sdp_scalars::Wide> : GenericNumTraits<sohs_sdp_scalars::Wide> {
  static inline sohs_sdp_scalars::Wide dummy_precision() {
    return std::numeric_limits<sohs_sdp_scalars::Wide>::epsilon() * 1024;
  }
};

template <>
struct NumTraits<sohs_sdp_scalars::ExtraWide>
    : GenericNumTraits<sohs_sdp_scalars::ExtraWide> {
  static inline sohs_sdp_scalars::ExtraWide dummy_precision() {
    return std::numeric_limits<sohs_sdp_scalars::ExtraWide>::epsilon() * 1024;
  }
};

}  // namespace Eigen

namespace sohs {

namespace {

using sohs_sdp_scalars::ExtraWide;
using sohs_sdp_scalars::Quad;
using sohs_sdp_scalars::Wide;

template <class S>
S scalar_from_rational(const Rational& x) {
  using boost::multiprecision::cpp_int;
  cpp_int num(x.get_num().get_str());
  cpp_int den(x.get_den().get_str());
  return static_cast<S>(num) / static_cast<S>(den);
}

template <>
double scalar_from_rational<double>(const Rational& x) {
  return x.get_d();
}

Rational rational_from_float(double x) { return Rational(x); }

template <class S>
Rational rational_from_float(const S& x) {
  if (x == 0) return Rational(0);
  int e = 0;
  S m = frexp(x, &e);
  const int dig = std::numeric_limits<S>::digits;
  m = ldexp(m, dig);
  boost::multiprecision::cpp_int zi = m.template convert_to<boost::multiprecision::cpp_int>();
  mpz_class z(zi.str());
  return Rational(z) * pow2(static_cast<long>(e) - dig);
}

struct LevelResult {
  bool converged = false;
  bool infeasible_hint = false;
  int iterations = 0;
  std::vector<Mat<Rational>> X;
  std::vector<Rational> free_values;
  Rational gap{0};
  Rational max_residual{0};
};

template <class S>
class Ipm {
  using MatS = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;

  struct Entry {
    int row, col;
    S val;
  };

 public:
  Ipm(const SdpProblemData& prob, unsigned tol_bits, bool verbose)
      : nb_(static_cast<int>(prob.block_sizes.size())),
        m_(static_cast<int>(prob.constraints.size())),
        nf_(prob.n_free),
        bs_(prob.block_sizes),
        verbose_(verbose) {
    using std::ldexp;
    tol_ = ldexp(S(1), -static_cast<int>(tol_bits));
    ntot_ = 0;
    for (int s : bs_) ntot_ += s;
    by_block_.assign(nb_, {});
    C_.resize(nb_);
    for (int b = 0; b < nb_; ++b) {
      C_[b] = MatS::Zero(bs_[b], bs_[b]);
    }
    for (const auto& e : prob.objective) {
      S v = scalar_from_rational<S>(e.value);
      C_[e.block](e.row, e.col) = v;
      C_[e.block](e.col, e.row) = v;
    }
    b_ = VecS::Zero(m_);
    F_ = MatS::Zero(m_, std::max(nf_, 1));
    for (int j = 0; j < m_; ++j) {
      const auto& con = prob.constraints[j];
      b_(j) = scalar_from_rational<S>(con.rhs);
      bmax_ = std::max(bmax_, abs_s(b_(j)));
      for (const auto& e : con.lhs) {
        by_block_[e.block].push_back({j, {e.row, e.col, scalar_from_rational<S>(e.value)}});
      }
      if (!con.free_coeffs.empty()) {
        for (int t = 0; t < nf_; ++t) F_(j, t) = scalar_from_rational<S>(con.free_coeffs[t]);
      }
    }
  }

  LevelResult run(unsigned round_bits, int max_iter) {
    std::vector<MatS> X(nb_), Z(nb_);
    S rho_p = std::max(S(1), bmax_ / S(ntot_));
    for (int b = 0; b < nb_; ++b) {
      X[b] = MatS::Identity(bs_[b], bs_[b]) * rho_p;
      Z[b] = MatS::Identity(bs_[b], bs_[b]);
    }
    VecS y = VecS::Zero(m_);
    VecS u = VecS::Zero(std::max(nf_, 1));

    LevelResult out;
    S best_merit = S(-1);
    int since_best = 0;
    S last_rp = 0;
    bool diverged = false;
    // A complementarity gap blowing up (or a long stall) while the primal
    // residual stays large relative to b is the infeasibility signature.
    auto finish = [&]() -> LevelResult& {
      out.infeasible_hint = (diverged || out.iterations > 20) &&
                            last_rp > std::max(S(1), bmax_) / 100;
      return out;
    };

    std::vector<MatS> W(nb_), Zinv(nb_), Rd(nb_), H(nb_), Rc(nb_), dX(nb_), dZ(nb_);
    std::vector<Eigen::LLT<MatS>> lltX(nb_), lltZ(nb_);

    for (int iter = 0; iter < max_iter; ++iter) {
      out.iterations = iter;
      // residuals
      VecS rp = b_;
      for (int b = 0; b < nb_; ++b) {
        Rd[b] = C_[b] - Z[b];
        for (const auto& [j, e] : by_block_[b]) {
          rp(j) -= (e.row == e.col ? e.val : 2 * e.val) * X[b](e.row, e.col);
          Rd[b](e.row, e.col) -= y(j) * e.val;
          if (e.row != e.col) Rd[b](e.col, e.row) -= y(j) * e.val;
        }
      }
      if (nf_ > 0) rp -= F_.leftCols(nf_) * u.head(nf_);
      VecS rf = nf_ > 0 ? VecS(-F_.leftCols(nf_).transpose() * y) : VecS();

      S gap = 0;
      for (int b = 0; b < nb_; ++b) gap += X[b].cwiseProduct(Z[b]).sum();
      S rp_inf = rp.template lpNorm<Eigen::Infinity>();
      S rd_inf = 0;
      for (int b = 0; b < nb_; ++b) rd_inf = std::max(rd_inf, Rd[b].template lpNorm<Eigen::Infinity>());
      if (nf_ > 0) rd_inf = std::max(rd_inf, rf.template lpNorm<Eigen::Infinity>());

      if (verbose_) {
        std::cerr << "  ipm iter " << iter << " gap " << static_cast<double>(gap)
                  << " rp " << static_cast<double>(rp_inf) << " rd "
                  << static_cast<double>(rd_inf) << "\n";
      }
      last_rp = rp_inf;
      if (gap <= tol_ && rp_inf <= tol_ && rd_inf <= tol_) {
        out.converged = true;
        harvest(out, X, u, gap, rp_inf, round_bits);
        return out;
      }
      if (!(gap == gap) || gap > S(1) / (std::numeric_limits<S>::epsilon() *
                                         std::numeric_limits<S>::epsilon())) {
        diverged = true;
        return finish();
      }
      S merit = std::max(gap, std::max(rp_inf, rd_inf));
      if (best_merit < 0 || merit < best_merit * S(0.9)) {
        best_merit = merit;
        since_best = 0;
      } else if (++since_best > 12) {
        return finish();
      }

      S mu = gap / S(ntot_);

      // Nesterov-Todd scaling point per block
      bool factor_ok = true;
      for (int b = 0; b < nb_; ++b) {
        lltX[b].compute(X[b]);
        lltZ[b].compute(Z[b]);
        if (lltX[b].info() != Eigen::Success || lltZ[b].info() != Eigen::Success) {
          factor_ok = false;
          break;
        }
        MatS Lx = lltX[b].matrixL();
        MatS Lz = lltZ[b].matrixL();
        Eigen::JacobiSVD<MatS> svd(Lz.transpose() * Lx,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
        VecS sv = svd.singularValues();
        for (int i = 0; i < sv.size(); ++i) {
          if (sv(i) <= 0) {
            factor_ok = false;
            break;
          }
          sv(i) = S(1) / sqrt_s(sv(i));
        }
        if (!factor_ok) break;
        MatS G = Lx * svd.matrixV() * sv.asDiagonal();
        W[b] = G * G.transpose();
        MatS I = MatS::Identity(bs_[b], bs_[b]);
        Zinv[b] = lltZ[b].solve(I);
      }
      if (!factor_ok) return finish();

      // Schur complement matrix
      MatS M = MatS::Zero(m_, m_);
      for (int b = 0; b < nb_; ++b) {
        const auto& lst = by_block_[b];
        for (size_t jj = 0; jj < lst.size(); ++jj) {
          const auto& [j, ej] = lst[jj];
          MatS T;
          if (ej.row == ej.col) {
            T = ej.val * (W[b].col(ej.row) * W[b].row(ej.row));
          } else {
            T = ej.val * (W[b].col(ej.row) * W[b].row(ej.col) +
                          W[b].col(ej.col) * W[b].row(ej.row));
          }
          for (size_t ii = 0; ii < lst.size(); ++ii) {
            const auto& [i, ei] = lst[ii];
            if (i > j) continue;
            S v = (ei.row == ei.col ? T(ei.row, ei.col)
                                    : T(ei.row, ei.col) + T(ei.col, ei.row));
            M(i, j) += ei.val * v;
          }
        }
      }
      M = M.template selfadjointView<Eigen::Upper>();

      Eigen::LLT<MatS> lltM(M);
      {
        S ridge = M.diagonal().maxCoeff() * std::numeric_limits<S>::epsilon() * 16;
        int tries = 0;
        while (lltM.info() != Eigen::Success && tries++ < 8) {
          M.diagonal().array() += ridge;
          ridge *= 64;
          lltM.compute(M);
        }
        if (lltM.info() != Eigen::Success) return finish();
      }
      MatS MinvF;
      Eigen::LLT<MatS> lltS;
      if (nf_ > 0) {
        MinvF = lltM.solve(F_.leftCols(nf_));
        MatS Sff = F_.leftCols(nf_).transpose() * MinvF;
        lltS.compute(Sff);
        if (lltS.info() != Eigen::Success) return finish();
      }

      auto solve_direction = [&](const std::vector<MatS>& Rcv, VecS& dy, VecS& du) {
        VecS g = rp;
        for (int b = 0; b < nb_; ++b) {
          H[b] = W[b] * Rd[b] * W[b] - Rcv[b];
          for (const auto& [j, e] : by_block_[b]) {
            g(j) += (e.row == e.col ? e.val : 2 * e.val) * H[b](e.row, e.col);
          }
        }
        if (nf_ > 0) {
          VecS t = lltM.solve(g);
          du = lltS.solve(F_.leftCols(nf_).transpose() * t - rf);
          dy = lltM.solve(g - F_.leftCols(nf_) * du);
        } else {
          dy = lltM.solve(g);
        }
        for (int b = 0; b < nb_; ++b) {
          dZ[b] = Rd[b];
          for (const auto& [j, e] : by_block_[b]) {
            dZ[b](e.row, e.col) -= dy(j) * e.val;
            if (e.row != e.col) dZ[b](e.col, e.row) -= dy(j) * e.val;
          }
          dX[b] = Rcv[b] - W[b] * dZ[b] * W[b];
          dX[b] = ((dX[b] + dX[b].transpose()) / 2).eval();
          dZ[b] = ((dZ[b] + dZ[b].transpose()) / 2).eval();
        }
      };

      auto max_step = [&](const std::vector<MatS>& P, const std::vector<Eigen::LLT<MatS>>& llt,
                          const std::vector<MatS>& D) {
        S alpha = S(1) / std::numeric_limits<S>::epsilon();
        for (int b = 0; b < nb_; ++b) {
          MatS L = llt[b].matrixL();
          MatS T1 = L.template triangularView<Eigen::Lower>().solve(D[b]);
          MatS K = L.template triangularView<Eigen::Lower>().solve(MatS(T1.transpose()));
          Eigen::SelfAdjointEigenSolver<MatS> es(K, Eigen::EigenvaluesOnly);
          S lmin = es.eigenvalues().minCoeff();
          if (lmin < 0) alpha = std::min(alpha, -S(1) / lmin);
        }
        (void)P;
        return alpha;
      };

      // predictor (affine scaling)
      VecS dy, du;
      for (int b = 0; b < nb_; ++b) Rc[b] = -X[b];
      solve_direction(Rc, dy, du);
      S ap = std::min(S(1), S(0.98) * max_step(X, lltX, dX));
      S ad = std::min(S(1), S(0.98) * max_step(Z, lltZ, dZ));
      S gap_aff = 0;
      for (int b = 0; b < nb_; ++b)
        gap_aff += (X[b] + ap * dX[b]).cwiseProduct(Z[b] + ad * dZ[b]).sum();
      if (gap_aff < 0) gap_aff = 0;
      S sig = (gap_aff / gap) * (gap_aff / gap) * (gap_aff / gap);
      sig = std::min(std::max(sig, std::numeric_limits<S>::epsilon()), S(0.999));

      // corrector (recentred)
      for (int b = 0; b < nb_; ++b) Rc[b] = sig * mu * Zinv[b] - X[b];
      solve_direction(Rc, dy, du);
      ap = std::min(S(1), S(0.98) * max_step(X, lltX, dX));
      ad = std::min(S(1), S(0.98) * max_step(Z, lltZ, dZ));

      for (int b = 0; b < nb_; ++b) {
        X[b] += ap * dX[b];
        X[b] = ((X[b] + X[b].transpose()) / 2).eval();
        Z[b] += ad * dZ[b];
        Z[b] = ((Z[b] + Z[b].transpose()) / 2).eval();
      }
      y += ad * dy;
      if (nf_ > 0) u.head(nf_) += ap * du;
    }
    return finish();
  }

 private:
  static S abs_s(const S& x) { return x < 0 ? S(-x) : x; }
  static S sqrt_s(const S& x) {
    using std::sqrt;
    return sqrt(x);
  }

  void harvest(LevelResult& out, const std::vector<MatS>& X, const VecS& u, const S& gap,
               const S& rp_inf, unsigned round_bits) const {
    out.X.resize(nb_);
    for (int b = 0; b < nb_; ++b) {
      out.X[b].resize(bs_[b], bs_[b]);
      for (int i = 0; i < bs_[b]; ++i)
        for (int j = 0; j <= i; ++j) {
          Rational v = round_dyadic(rational_from_float(X[b](i, j)), round_bits);
          out.X[b](i, j) = v;
          out.X[b](j, i) = v;
        }
    }
    for (int t = 0; t < nf_; ++t)
      out.free_values.push_back(round_dyadic(rational_from_float(u(t)), round_bits));
    out.gap = rational_from_float(gap);
    out.max_residual = rational_from_float(rp_inf);
  }

  int nb_, m_, nf_;
  std::vector<int> bs_;
  bool verbose_;
  int ntot_ = 0;
  S tol_{0};
  S bmax_{0};
  std::vector<std::vector<std::pair<int, Entry>>> by_block_;
  std::vector<MatS> C_;
  VecS b_;
  MatS F_;
};

template <class S>
LevelResult run_level(const SdpProblemData& prob, unsigned tol_bits, unsigned round_bits,
                      bool verbose) {
  Ipm<S> solver(prob, tol_bits, verbose);
  return solver.run(round_bits, 200);
}

}  // namespace

SdpResult solve_sdp(const SdpProblemData& prob, unsigned tol_bits, unsigned round_bits,
                    bool verbose) {
  if (prob.block_sizes.empty() || prob.constraints.empty())
    throw std::invalid_argument("empty semidefinite program");
  if (tol_bits > 380)
    throw SolverStalled("requested tolerance below supported working precision");

  int start = tol_bits <= 30 ? 0 : tol_bits <= 85 ? 1 : tol_bits <= 170 ? 2 : 3;
  bool infeasible_hint = false;
  for (int level = start; level <= 3; ++level) {
    if (verbose) std::cerr << "sdp: precision level " << level << "\n";
    LevelResult r;
    switch (level) {
      case 0: r = run_level<double>(prob, tol_bits, round_bits, verbose); break;
      case 1: r = run_level<Quad>(prob, tol_bits, round_bits, verbose); break;
      case 2: r = run_level<Wide>(prob, tol_bits, round_bits, verbose); break;
      default: r = run_level<ExtraWide>(prob, tol_bits, round_bits, verbose); break;
    }
    if (r.converged) {
      SdpResult res;
      res.X = std::move(r.X);
      res.free_values = std::move(r.free_values);
      res.gap = r.gap;
      res.max_residual = r.max_residual;
      res.iterations = r.iterations;
      res.precision_level = level;
      return res;
    }
    infeasible_hint = infeasible_hint || r.infeasible_hint;
  }
  if (infeasible_hint)
    throw Infeasible("equality residual stalled far from zero");
  throw SolverStalled("interior-point iteration failed to reach tolerance");
}

}  // namespace sohs
