#include "vvl/spectral_cn.hpp"

namespace vvl {

NormalOperator make_flat_laplacian(const AxisPtr& axis) {
    const std::size_t n = axis->size();
    NormalOperator op;
    op.axis = axis;
    op.cm.assign(n, 0.0);
    op.cc.assign(n, 0.0);
    op.cp.assign(n, 0.0);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double hm = axis->nodes[j] - axis->nodes[j - 1];
        const double hp = axis->nodes[j + 1] - axis->nodes[j];
        d2_stencil(hm, hp, op.cm[j], op.cc[j], op.cp[j]);
    }
    return op;
}

NormalOperator make_radial_laplacian(const AxisPtr& axis) {
    const std::size_t n = axis->size();
    NormalOperator op;
    op.axis = axis;
    op.cm.assign(n, 0.0);
    op.cc.assign(n, 0.0);
    op.cp.assign(n, 0.0);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double r = axis->nodes[j];
        const double hm = r - axis->nodes[j - 1];
        const double hp = axis->nodes[j + 1] - r;
        const double rm = r - 0.5 * hm, rp = r + 0.5 * hp;
        const double hbar = 0.5 * (hm + hp);
        op.cm[j] = rm / (hm * hbar * r);
        op.cp[j] = rp / (hp * hbar * r);
        op.cc[j] = -(rm / hm + rp / hp) / (hbar * r);
    }
    return op;
}

namespace {

template <class Scalar>
void cn_step_impl(const NormalOperator& op, std::span<const double> alpha, double eps, double dt,
                  std::vector<Scalar>& u, std::span<const Scalar> forcing, Scalar bc0, Scalar bc1,
                  int time_index) {
    const std::size_t n = u.size();
    static thread_local std::vector<Scalar> lower, diag, upper, rhs;
    lower.assign(n, Scalar{});
    diag.assign(n, Scalar{});
    upper.assign(n, Scalar{});
    rhs.assign(n, Scalar{});

    const double half = 0.5 * eps * dt;
    diag[0] = Scalar{1.0};
    rhs[0] = bc0;
    diag[n - 1] = Scalar{1.0};
    rhs[n - 1] = bc1;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        lower[j] = Scalar{-half * op.cm[j]};
        upper[j] = Scalar{-half * op.cp[j]};
        diag[j] = Scalar{1.0 - half * (op.cc[j] - alpha[j])};
        Scalar lu = Scalar{op.cm[j]} * u[j - 1] + Scalar{op.cc[j] - alpha[j]} * u[j] +
                    Scalar{op.cp[j]} * u[j + 1];
        rhs[j] = u[j] + Scalar{half} * lu;
        if (!forcing.empty()) rhs[j] += Scalar{dt} * forcing[j];
    }
    solve_tridiagonal(lower, diag, upper, rhs, time_index);
    u = rhs;
}

}  // namespace

void cn_mode_step(const NormalOperator& op, std::span<const double> alpha, double eps, double dt,
                  std::vector<cplx>& u, std::span<const cplx> forcing, cplx bc0, cplx bc1,
                  int time_index) {
    cn_step_impl<cplx>(op, alpha, eps, dt, u, forcing, bc0, bc1, time_index);
}

void cn_step(const NormalOperator& op, std::span<const double> alpha, double eps, double dt,
             std::vector<double>& u, std::span<const double> forcing, double bc0, double bc1,
             int time_index) {
    cn_step_impl<double>(op, alpha, eps, dt, u, forcing, bc0, bc1, time_index);
}

}  // namespace vvl
