#include "qforms/cubes.hpp"

#include <stdexcept>

#include "qforms/compose.hpp"

namespace qf {

std::array<Form, 3> sliced_forms(const Cube &K)
{
    const Int &a = K.a, &b = K.b, &c = K.c, &d = K.d;
    const Int &e = K.e, &f = K.f, &g = K.g, &h = K.h;
    Form Q1{b * e - a * f, b * g + d * e - a * h - c * f, d * g - c * h};
    Form Q2{c * e - a * g, c * f + d * e - a * h - b * g, d * f - b * h};
    Form Q3{b * c - a * d, b * g + c * f - a * h - d * e, f * g - e * h};
    return {Q1, Q2, Q3};
}

BilinearWitness gauss_multiply(const Cube &K, const Int &x1, const Int &y1,
                               const Int &x2, const Int &y2)
{
    Int x3 = K.e * x1 * x2 + K.f * x1 * y2 + K.g * x2 * y1 + K.h * y1 * y2;
    Int y3 = K.a * x1 * x2 + K.b * x1 * y2 + K.c * x2 * y1 + K.d * y1 * y2;
    return BilinearWitness{x3, y3};
}

bool verify_cube_law(const Cube &K)
{
    auto Q = sliced_forms(K);
    Int delta = discriminant(Q[0]);
    if (discriminant(Q[1]) != delta || discriminant(Q[2]) != delta)
        throw std::logic_error("verify_cube_law: sliced discriminants disagree");
    if (is_square(delta))
        throw std::invalid_argument("verify_cube_law: square discriminant");
    for (auto &q : Q)
        if (!is_primitive(q))
            throw std::invalid_argument("verify_cube_law: imprimitive slice");

    if (delta < 0) {
        /* A negative definite slice contributes the inverse of its
         * positivization: negating a suitable face of the cube sends two
         * slices to their negatives and flips the third's middle
         * coefficient, so [Q] reads as [(-A, B, -C)] when A < 0. The
         * multiplication identity forces an even number of negative
         * slices. */
        int neg = 0;
        for (auto &q : Q) neg += (q.A < 0);
        if (neg % 2)
            throw std::logic_error("verify_cube_law: odd number of negative definite slices");
        for (auto &q : Q)
            if (q.A < 0) q = Form{-q.A, q.B, -q.C};
    }

    Form t = compose_classes(Q[0], Q[1]).first;
    Form u = compose_classes(t, Q[2]).first;
    return equivalent(u, principal_form(delta)).has_value();
}

std::string render(const Cube &K)
{
    return "[" + K.a.get_str() + "," + K.b.get_str() + "," + K.c.get_str() + "," +
           K.d.get_str() + "," + K.e.get_str() + "," + K.f.get_str() + "," +
           K.g.get_str() + "," + K.h.get_str() + "]";
}

Cube parse_cube(const std::string &text)
{
    auto fail = [&]() -> void {
        throw std::invalid_argument("malformed cube literal: '" + text + "'");
    };
    if (text.size() < 17 || text.front() != '[' || text.back() != ']') fail();
    std::string body = text.substr(1, text.size() - 2);
    std::array<Int, 8> v;
    size_t pos = 0;
    for (int i = 0; i < 8; ++i) {
        size_t comma = (i < 7) ? body.find(',', pos) : body.size();
        if (comma == std::string::npos) fail();
        std::string piece = body.substr(pos, comma - pos);
        if (piece.empty()) fail();
        v[static_cast<size_t>(i)] = from_string(piece);
        pos = comma + 1;
    }
    if (pos <= body.size() && body.find(',', pos) != std::string::npos) fail();
    return Cube{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

} // namespace qf
