#include "qforms/forms.hpp"

#include <stdexcept>

namespace qf {

Int discriminant(const Form &Q)
{
    return Q.B * Q.B - 4 * Q.A * Q.C;
}

bool is_primitive(const Form &Q)
{
    return gcd(Q.A, Q.B, Q.C) == 1;
}

Form apply_transform(const Form &Q, const Transform &S)
{
    if (S.det() != 1)
        throw std::invalid_argument("apply_transform: det S must be +1");
    Int A2 = Q.eval(S.r, S.t);
    Int C2 = Q.eval(S.s, S.u);
    Int B2 = 2 * Q.A * S.r * S.s + Q.B * (S.r * S.u + S.s * S.t) + 2 * Q.C * S.t * S.u;
    return Form{A2, B2, C2};
}

namespace {

/* Translation x -> x + k y, i.e. B -> B + 2Ak. */
Transform shift(const Int &k) { return Transform{1, k, 0, 1}; }

/* (A,B,C) -> (C,-B,A). */
const Transform FLIP{0, -1, 1, 0};

bool reduced_definite(const Form &Q)
{
    Int aB = abs(Q.B);
    if (!(aB <= Q.A && Q.A <= Q.C)) return false;
    if (Q.B < 0 && (aB == Q.A || Q.A == Q.C)) return false;
    return true;
}

bool reduced_indefinite(const Form &Q, const Int &delta)
{
    if (Q.B <= 0 || Q.B * Q.B >= delta) return false;
    Int twoA = 2 * abs(Q.A);
    /* sqrt(delta) - B < 2|A|  <=>  delta < (2|A| + B)^2 */
    if (delta >= (twoA + Q.B) * (twoA + Q.B)) return false;
    /* 2|A| < sqrt(delta) + B  <=>  2|A| - B < sqrt(delta) */
    Int d = twoA - Q.B;
    if (d >= 0 && d * d >= delta) return false;
    return true;
}

} // namespace

bool is_reduced(const Form &Q)
{
    Int delta = discriminant(Q);
    if (delta < 0) return Q.A > 0 && reduced_definite(Q);
    return reduced_indefinite(Q, delta);
}

static std::pair<Form, Transform> reduce_definite(Form Q)
{
    Transform S = Transform::identity();
    for (;;) {
        /* normalize B into (-A, A] via B -> B + 2Ak, k = floor((A - B)/2A) */
        if (!(Q.B > -Q.A && Q.B <= Q.A)) {
            Int k, num = Q.A - Q.B, den = 2 * Q.A;
            mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            Transform T = shift(k);
            Q = apply_transform(Q, T);
            S = S * T;
        }
        if (Q.A > Q.C) {
            Q = apply_transform(Q, FLIP);
            S = S * FLIP;
            continue;
        }
        break;
    }
    /* boundary sign convention */
    if (Q.B < 0 && (-Q.B == Q.A || Q.A == Q.C)) {
        if (-Q.B == Q.A) {
            Transform T = shift(1);
            Q = apply_transform(Q, T);
            S = S * T;
        } else {
            Q = apply_transform(Q, FLIP);
            S = S * FLIP;
        }
    }
    return {Q, S};
}

/* One indefinite reduction/rho step: leading coefficient becomes C and the
 * new middle coefficient is -B mod 2C placed in the standard window. */
static std::pair<Form, Transform> rho_step(const Form &Q, const Int &delta)
{
    Int c = Q.C;
    if (c == 0) throw std::logic_error("rho_step: square discriminant");
    Int twoC = 2 * abs(c);
    Int root = isqrt(delta);
    Int Bp;
    if (abs(c) > root) {
        /* B' = -B mod 2|C| in (-|C|, |C|] */
        Bp = mod(-Q.B, twoC);
        if (Bp > abs(c)) Bp -= twoC;
    } else {
        /* B' = -B mod 2|C| in (root - 2|C|, root] */
        Bp = root - mod(root + Q.B, twoC);
    }
    /* witness: S = [[0,-1],[1,k]] with B' = 2Ck - B */
    Int k = exact_div(Bp + Q.B, 2 * c);
    Transform T{0, -1, 1, k};
    Form R = apply_transform(Q, T);
    return {R, T};
}

static std::pair<Form, Transform> reduce_indefinite(Form Q, const Int &delta)
{
    Transform S = Transform::identity();
    while (!reduced_indefinite(Q, delta)) {
        auto [R, T] = rho_step(Q, delta);
        Q = R;
        S = S * T;
    }
    return {Q, S};
}

std::pair<Form, Transform> reduce(const Form &Q)
{
    Int delta = discriminant(Q);
    if (is_square(delta))
        throw std::invalid_argument("reduce: square discriminant");
    if (!is_primitive(Q))
        throw std::invalid_argument("reduce: imprimitive form");
    if (delta < 0) {
        if (Q.A <= 0)
            throw std::invalid_argument("reduce: definite form must have A > 0");
        return reduce_definite(Q);
    }
    return reduce_indefinite(Q, delta);
}

Form reduce_form(const Form &Q)
{
    return reduce(Q).first;
}

std::pair<Form, Transform> rho_reduced(const Form &Q)
{
    Int delta = discriminant(Q);
    if (delta < 0 || !reduced_indefinite(Q, delta))
        throw std::invalid_argument("rho_reduced: needs a reduced indefinite form");
    auto [R, T] = rho_step(Q, delta);
    if (!reduced_indefinite(R, delta))
        throw std::logic_error("rho_reduced: step left the reduced cycle");
    return {R, T};
}

std::optional<Transform> equivalent(const Form &Q1, const Form &Q2)
{
    if (!is_primitive(Q1) || !is_primitive(Q2)) return std::nullopt;
    Int d1 = discriminant(Q1), d2 = discriminant(Q2);
    if (d1 != d2 || is_square(d1)) return std::nullopt;
    if (d1 < 0 && (Q1.A <= 0 || Q2.A <= 0)) return std::nullopt;

    auto [R1, S1] = reduce(Q1);
    auto [R2, S2] = reduce(Q2);
    if (d1 < 0) {
        if (R1 == R2) return S1 * S2.inverse();
        return std::nullopt;
    }
    /* indefinite: walk the rho cycle of R1 looking for R2 */
    Form cur = R1;
    Transform acc = Transform::identity();
    do {
        if (cur == R2) return S1 * acc * S2.inverse();
        auto [nxt, T] = rho_reduced(cur);
        cur = nxt;
        acc = acc * T;
    } while (!(cur == R1));
    return std::nullopt;
}

Form principal_form(const Int &delta)
{
    if (is_square(delta))
        throw std::invalid_argument("principal_form: square discriminant");
    Int r = mod(delta, 4);
    if (r == 0) return Form{1, 0, -delta / 4};
    if (r == 1) return Form{1, 1, (1 - delta) / 4};
    throw std::invalid_argument("principal_form: delta must be 0 or 1 mod 4");
}

std::pair<Form, Transform> lift_representation(const Form &Q, const Int &x, const Int &y)
{
    if (gcd(x, y) != 1)
        throw std::invalid_argument("lift_representation: gcd(x, y) must be 1");
    /* complete (x, y) to [[x, s],[y, u]] with xu - ys = 1 */
    Int u, v;
    xgcd(x, y, u, v); /* xu + yv = 1 */
    Transform S{x, -v, y, u};
    Form R = apply_transform(Q, S);
    /* normalize the middle coefficient into [0, 2|A'|) */
    if (R.A != 0) {
        Int twoA = 2 * abs(R.A);
        Int Bn = mod(R.B, twoA);
        Int k = exact_div(Bn - R.B, 2 * R.A);
        Transform T = shift(k);
        R = apply_transform(R, T);
        S = S * T;
    }
    return {R, S};
}

Form derive(const Form &Q, const Int &p)
{
    if (p < 1) throw std::invalid_argument("derive: p must be positive");
    if (gcd(Q.A, p) != 1)
        throw std::invalid_argument("derive: gcd(A, p) must be 1");
    return Form{Q.A, Q.B * p, Q.C * p * p};
}

Form underive_odd(const Form &Q)
{
    Int delta = discriminant(Q);
    /* m = 3 mod 4  <=>  delta = -4m = -12 mod 16 */
    if (!is_primitive(Q) || delta >= 0 || mod(delta, 16) != 4)
        throw std::invalid_argument("underive_odd: needs primitive Q of discriminant -4m, m = 3 mod 4");
    if (mod(Q.B, 4) == 0)
        return Form{Q.A, Q.A + Q.B / 2, exact_div(Q.A + Q.B + Q.C, 4)};
    /* with B = 2 mod 4 the substitutions halve one variable instead */
    if (mod(Q.B, 4) == 2 && mod(Q.C, 4) == 0)
        return Form{Q.A, Q.B / 2, exact_div(Q.C, 4)};
    if (mod(Q.B, 4) == 2 && mod(Q.A, 4) == 0)
        return Form{exact_div(Q.A, 4), Q.B / 2, Q.C};
    throw std::logic_error("underive_odd: no case applies (input violates the precondition)");
}

std::string render(const Form &Q)
{
    return "(" + Q.A.get_str() + "," + Q.B.get_str() + "," + Q.C.get_str() + ")";
}

Form parse_form(const std::string &text)
{
    auto fail = [&]() -> void {
        throw std::invalid_argument("malformed form literal: '" + text + "'");
    };
    if (text.size() < 7 || text.front() != '(' || text.back() != ')') fail();
    std::string body = text.substr(1, text.size() - 2);
    size_t c1 = body.find(',');
    size_t c2 = body.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) fail();
    if (body.find(',', c2 + 1) != std::string::npos) fail();
    std::string sa = body.substr(0, c1);
    std::string sb = body.substr(c1 + 1, c2 - c1 - 1);
    std::string sc = body.substr(c2 + 1);
    if (sa.empty() || sb.empty() || sc.empty()) fail();
    return Form{from_string(sa), from_string(sb), from_string(sc)};
}

} // namespace qf
