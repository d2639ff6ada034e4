#ifndef QFORMS_FORMS_HPP
#define QFORMS_FORMS_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "qforms/int_utils.hpp"

namespace qf {

/* Binary quadratic form A x^2 + B xy + C y^2, written (A,B,C). */
struct Form {
    Int A, B, C;

    Form() : A(0), B(0), C(0) {}
    Form(Int a, Int b, Int c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {}

    Int eval(const Int &x, const Int &y) const
    {
        return A * x * x + B * x * y + C * y * y;
    }

    friend bool operator==(const Form &l, const Form &r)
    {
        return l.A == r.A && l.B == r.B && l.C == r.C;
    }
    friend bool operator<(const Form &l, const Form &r)
    {
        if (l.A != r.A) return l.A < r.A;
        if (l.B != r.B) return l.B < r.B;
        return l.C < r.C;
    }
};

/* Element of SL2(Z): [[r, s], [t, u]], ru - st = 1. Acts on forms by
 * Q|_S(x, y) = Q(rx + sy, tx + uy). */
struct Transform {
    Int r, s, t, u;

    static Transform identity() { return {1, 0, 0, 1}; }

    Int det() const { return r * u - s * t; }

    Transform operator*(const Transform &o) const
    {
        return {r * o.r + s * o.t, r * o.s + s * o.u,
                t * o.r + u * o.t, t * o.s + u * o.u};
    }

    Transform inverse() const { return {u, -s, -t, r}; }

    friend bool operator==(const Transform &l, const Transform &r)
    {
        return l.r == r.r && l.s == r.s && l.t == r.t && l.u == r.u;
    }
};

Int discriminant(const Form &Q);
bool is_primitive(const Form &Q);

/* Q|_S; rejects det S != 1. Preserves discriminant and primitivity. */
Form apply_transform(const Form &Q, const Transform &S);

/* True for the canonical reduced representative:
 *  definite  (disc < 0, A > 0): |B| <= A <= C, with B >= 0 if |B| = A or A = C;
 *  indefinite (disc > 0): 0 < B < sqrt(disc) and sqrt(disc) - B < 2|A| < sqrt(disc) + B. */
bool is_reduced(const Form &Q);

/* Gauss reduction with an exact witness S such that Q|_S equals the
 * returned form. Input must be primitive with nonsquare discriminant,
 * and positive definite when disc < 0. */
std::pair<Form, Transform> reduce(const Form &Q);

/* Reduced form only. */
Form reduce_form(const Form &Q);

/* The rho step on a reduced indefinite form, with witness accumulation:
 * returns the next reduced form in the cycle. */
std::pair<Form, Transform> rho_reduced(const Form &Q);

/* Proper (SL2) equivalence: a witness with Q1|_S = Q2, or nullopt.
 * Definite classes compare canonical reduced forms; indefinite classes
 * compare reduction cycles. */
std::optional<Transform> equivalent(const Form &Q1, const Form &Q2);

/* (1,0,m) for delta = -4m, (1,1,m) for delta = 1-4m; either sign of delta. */
Form principal_form(const Int &delta);

/* Given gcd(x,y) = 1, an equivalent form with leading coefficient Q(x,y)
 * (middle coefficient normalized into [0, 2|A'|)), plus the witness. */
std::pair<Form, Transform> lift_representation(const Form &Q, const Int &x, const Int &y);

/* (A, Bp, Cp^2) of discriminant disc * p^2; requires gcd(A, p) = 1. */
Form derive(const Form &Q, const Int &p);

/* For primitive Q of discriminant -4m, m = 3 mod 4: the form of
 * discriminant -m representing every integer Q represents. */
Form underive_odd(const Form &Q);

/* Canonical text rendering "(A,B,C)" and its strict parser. */
std::string render(const Form &Q);
Form parse_form(const std::string &text);

} // namespace qf

#endif
