#ifndef QMECH_CALCULUS_HPP
#define QMECH_CALCULUS_HPP

// Differential calculus on the quantum plane: one- and two-forms, the two
// derivative conventions, the symplectic form and the deformed bracket.
//
// A one-form carries a side tag.  On the Right side the differentials stand
// left of their coefficients, df = dx*(D_x f)^R + dp*(D_p f)^R; on the Left
// side the coefficients stand left, df = (D_x f)^L*dx + (D_p f)^L*dp.  The
// two expansions describe the same form; convert_form moves between them by
// pushing differentials through monomials with the exchange rules
//   x dx = q^2 dx x ,  x dp = q dp x ,  p dp = q^2 dp p ,
//   p dx = q dx p + (q^2 - 1) dp x .

#include <utility>

#include "qmech/qpoly.hpp"

namespace qmech {

enum class Side : unsigned char { Left, Right };
enum class Dir : unsigned char { X, P };

struct QOneForm {
    QPoly cx;  // coefficient attached to dx
    QPoly cp;  // coefficient attached to dp
    Side side = Side::Right;
};

// Two-forms are one dimensional: every wedge reduces to dx^dp times a right
// coefficient via dp^dx = -q^(-1) dx^dp.
struct QTwoForm {
    QPoly c;  // dx ^ dp * c
};

// Vector field cx*del_x + cp*del_p with coefficients on the left, matching
// the contraction axiom i_{f del_i} = f * i_{del_i}.
struct QVector {
    QPoly cx;
    QPoly cp;
};

// Right q-derivatives: del_x(x^n p^m) = [n] x^(n-1) p^m and
// del_p(x^n p^m) = q^n [m] x^n p^(m-1) with [n] = qint(n).
QPoly partial_right(const QPoly& f, Dir dir);
// Left q-derivatives, defined by the unique left expansion of df.
QPoly partial_left(const QPoly& f, Dir dir);

// df on the requested side (Right by default).
QOneForm differential(const QPoly& f, Side side = Side::Right);

// Re-expands a one-form on the other side; exact, invertible.
QOneForm convert_form(const QOneForm& w, Side target);

// Wedge of two one-forms, reduced to the dx^dp basis.
QTwoForm wedge(const QOneForm& a, const QOneForm& b);

// The deformed symplectic form q^(-1/2) dx ^ dp.
QTwoForm symplectic_form();

// Contraction axioms: i_V(dx)=cx, i_V(dp)=cp through right coefficients,
// i_V(dx^dp) = cx*dp - q^(-1)*cp*dx before normalization.
QPoly contract(const QVector& v, const QOneForm& w);
QOneForm contract(const QVector& v, const QTwoForm& w);

// Hamiltonian field in the adopted normalization
//   X_f = q^(1/2) (D_p f)^L del_x - q^(-1/2) (D_x f)^L del_p .
QVector hamiltonian_field(const QPoly& f);

// Solves i_X w = df literally from the contraction axioms.  The del_p
// coefficient comes out q^2 times the one in hamiltonian_field; callers
// compare the two (see verify suite) and the ratio is reported, not hidden.
QVector field_from_contraction(const QPoly& f);

// q-Poisson bracket, closed formula
//   {f,g}_q = q^(1/2)(D_p g)^L (D_x f)^R - q^(-1/2)(D_x g)^L (D_p f)^R .
QPoly qpb_direct(const QPoly& f, const QPoly& g);
// Same bracket through the geometric route i_{X_g}(df).
QPoly qpb_contract(const QPoly& f, const QPoly& g);

}  // namespace qmech

#endif
