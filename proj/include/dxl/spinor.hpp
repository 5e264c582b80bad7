#ifndef DXL_SPINOR_HPP
#define DXL_SPINOR_HPP

#include <Eigen/Dense>
#include <complex>

namespace dxl {

// Spatial 3-vector; momenta are in electron-mass units, so the relativistic
// energy of a momentum p is energy() = sqrt(1 + |p|^2).
struct ThreeVector {
    double x = 0.0, y = 0.0, z = 0.0;
    double dot(const ThreeVector& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double energy() const;
    ThreeVector operator-() const { return {-x, -y, -z}; }
};

// The four plane-wave families: u (positive-energy electron), u_hat (sea
// electron), v (positron), v_hat (sea positron).  The hatted families carry
// negative frequency; their spatial momentum label follows the convention in
// which u_hat(p) pairs with exp(+i p.r) like u(p) does.
enum class Family { u, u_hat, v, v_hat };
enum class Spin { up, down };

using Spinor = Eigen::Vector4cd;
using SpinorMatrix = Eigen::Matrix4cd;

// Dirac representation: gamma(0) = diag(1,1,-1,-1), gamma(i) off-diagonal
// Pauli blocks; metric signature (+,-,-,-).
const SpinorMatrix& gamma(int mu);
SpinorMatrix sigma_tensor(int mu, int nu);  // (i/2) [gamma^mu, gamma^nu]
double metric(int mu, int nu);

// Exact free spinor, normalized so that psi^dagger psi = 1.
Spinor make_spinor(Family f, Spin s, const ThreeVector& p);

Eigen::RowVector4cd dirac_adjoint(const Spinor& psi);  // psi^dagger gamma^0

// Insertion between adjoint-bra and ket: 1, gamma^mu, or sigma^{mu nu}.
struct Insertion {
    enum class Kind { scalar, vector, tensor } kind = Kind::scalar;
    int mu = 0, nu = 0;
    static Insertion scalar() { return {Kind::scalar, 0, 0}; }
    static Insertion vector(int mu) { return {Kind::vector, mu, 0}; }
    static Insertion tensor(int mu, int nu) { return {Kind::tensor, mu, nu}; }
};

// bar(bra) * Gamma * ket, both spinors taken at the same momentum.
std::complex<double> bilinear(Family bra_f, Spin bra_s, const Insertion& ins,
                              Family ket_f, Spin ket_s, const ThreeVector& p);

// Residual norm of the free-field equation satisfied by the family:
//   u:     (+gamma.p - 1) u     with p = (E, +pvec)
//   u_hat: (-gamma.p - 1) uhat  with p = (E, -pvec)
//   v:     (-gamma.p - 1) v     with p = (E, +pvec)
//   v_hat: (+gamma.p - 1) vhat  with p = (E, -pvec)
double dirac_residual(Family f, Spin s, const ThreeVector& p);

// Residual of the charge-conjugation map i gamma^2 psi^*, checked against the
// partner family at +p and the cross-family partner at -p with flipped spin.
double charge_conjugation_residual(Family f, Spin s, const ThreeVector& p);

// Frobenius norm of sum_s psi psi_bar minus the energy projector:
//   u:     +(gamma.(E,p)  + 1) / 2E      v:     +(gamma.(E,p)  - 1) / 2E
//   u_hat: -(gamma.(-E,p) + 1) / 2E      v_hat: -(gamma.(-E,p) - 1) / 2E
double completeness_residual(Family f, const ThreeVector& p);

// Channel selector for the sea-exchange kernels.
struct ExchangeChannel {
    enum class Kind { vector, scalar, tensor } kind = Kind::vector;
    int mu = 0, nu = 0, rho = 0, sigma = 0;
    static ExchangeChannel scalar() { return {Kind::scalar, 0, 0, 0, 0}; }
    static ExchangeChannel vector(int mu, int nu) { return {Kind::vector, mu, nu, 0, 0}; }
    static ExchangeChannel tensor(int mu, int nu, int rho, int sigma) {
        return {Kind::tensor, mu, nu, rho, sigma};
    }
};

// Momentum-space weight of the sea-exchange pair density against the rest
// spinor: the spin-summed, index-symmetrized sea ladder with the plane-wave
// phases stripped (it multiplies cos[p.(r-r')] under the momentum integral).
// Closed forms it must reproduce, E = energy(p):
//   vector(mu,nu)        -> -g^{mu nu} / E
//   scalar               -> -1 / E
//   tensor(mu,nu,rho,si) -> -(g^{mu rho} g^{nu si} - g^{mu si} g^{nu rho}) / E
// (the second tensor term vanishes on the antisymmetric components the spin
// density selects, reducing to the bare -g^{mu rho} g^{nu si} / E there).
std::complex<double> exchange_integrand_one_momentum(const ExchangeChannel& ch,
                                                     const ThreeVector& p);

// Density-density (00) element of the two-momentum sea ladder at separation
// vector d = r - r':
//   -2 [1/(EE') + 1 + p.p'/(EE')] cos[(p-p').d]
//   -2 [1/(EE') - 1 - p.p'/(EE')] cos[(p+p').d]
double exchange_integrand_two_momenta(const ThreeVector& p, const ThreeVector& p2,
                                      const ThreeVector& separation);

}  // namespace dxl

#endif
