#pragma once
// Divided derivatives and the d-, partial- and Delta-matrix constructions,
// symbolically over quotients of multivariate polynomials and numerically over K.

#include <vector>

#include "ffid/matk.hpp"
#include "ffid/mpoly.hpp"

namespace ffid {

using MatR = Mat<MRat>;

// D_{v,0} f, ..., D_{v,n-1} f
std::vector<MRat> hyperderivs(const MRat& f, int v, int n);
MRat hyperderive(const MRat& f, int v, int j);

// sum_{i<d} D_{v,i}(f) N^i
MatR d_matrix(const MRat& f, int v, int d);
// d x s matrix whose row r (1-based) is D_{v,d-r} applied to f_1..f_s
MatR partial_matrix(const std::vector<MRat>& fs, int v, int d);
// entries D_{x,d-i} D_{z,j-1} f
MatR delta_matrix(const MRat& f, int x, int z, int d);
// H_{a,b} = partial_a((a-b)^{d-1}, ..., a-b, 1) for a variable a and any b
MatR h_matrix(int a, const MPoly& b, int d);
// (1 + (a - b) N^T)^d by repeated multiplication
MatR m_matrix(const MPoly& a, const MPoly& b, int d);
// f_d(x,y,z) = sum_{j<d} (z-y)^j (x-y)^{d-1-j}; f_0 = 0
MPoly fd_poly(const Field& F, int d);
MPoly fd_poly(const Field& F, int d, int x, int y, int z);

MatR identity_r(const Field& F, int d);
MatR lift(const MatK& m);

// each column is the hyperderivative tower of its bottom entry in v
bool is_partial_matrix(const MatR& m, int v);
// partial_x-matrix whose anti-transpose is a partial_z-matrix
bool is_delta_matrix(const MatR& m, int x, int z);

// numeric counterparts over K
MatK h_matrix(const RatK& a, const RatK& b, int d);
MatK m_matrix(const RatK& a, const RatK& b, int d);
// M_l read off the expansion (t - theta^{q^l})^d = sum a_i (t - theta)^i, placed as in its definition
MatK m_matrix_taylor(const Field& F, int l, int d);
// Z-hat: upper-triangular Toeplitz lift of a column (z_{d-1}, ..., z_0)^T
MatK hat(const MatK& column);

// bivariate truncated expansion sum c_{a,b} X^a Z^b with a, b < d
class BiJet {
public:
    BiJet(int d, const Field& F);
    static BiJet outer(const Jet& u, const Jet& v);
    BiJet operator+(const BiJet& o) const;
    BiJet operator*(const BiJet& o) const;
    RatK& at(int a, int b) { return c_[a * d_ + b]; }
    const RatK& at(int a, int b) const { return c_[a * d_ + b]; }
    int size() const { return d_; }
    // Delta-matrix whose (i, j) entry is the coefficient of X^{d-i} Z^{j-1}
    MatK delta() const;

private:
    int d_;
    std::vector<RatK> c_;
};

// Delta_{x,z}(f_d(x,y,z) * A(x) * B(z)) at the point (x0, y0, z0), with A, B given as jets at x0, z0
MatK delta_fd_at(const RatK& x0, const RatK& y0, const RatK& z0, const Jet& A, const Jet& B, int d);

}  // namespace ffid
