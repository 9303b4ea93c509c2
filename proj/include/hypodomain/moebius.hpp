#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypodomain {

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

/// Element of PSL2(Z) as a sign-normalized unimodular integer matrix.
/// Normalization: c > 0, or c == 0 and d > 0, so each group element has
/// exactly one representative and equality is structural.
struct GroupElement {
    int64_t a = 1, b = 0, c = 0, d = 1;

    GroupElement() = default;
    GroupElement(int64_t a_, int64_t b_, int64_t c_, int64_t d_);

    static GroupElement identity() { return {}; }
    static GroupElement shift();      // T: z -> z+1
    static GroupElement flip();       // S: z -> -1/z

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Point of the upper half-plane; y > 0 enforced at construction.
struct Point {
    double x = 0.0, y = 1.0;

    Point() = default;
    Point(double x_, double y_);
};

/// Axis-aligned closed rectangle in H. y_hi may be +infinity.
struct Box {
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;

    Box() = default;
    Box(double xl, double xh, double yl, double yh);

    double width() const { return x_hi - x_lo; }
    bool contains(const Point& z) const {
        return z.x >= x_lo && z.x <= x_hi && z.y >= y_lo && z.y <= y_hi;
    }
};

Point apply(const GroupElement& m, const Point& z);
GroupElement compose(const GroupElement& m, const GroupElement& n);
GroupElement inverse(const GroupElement& m);
GroupElement translation_power(int64_t k);   // T^k

double hyperbolic_distance(const Point& z, const Point& w);

/// Textual matrix form "[a,b;c,d]" used by the CLI.
std::string format_matrix(const GroupElement& m);
GroupElement parse_matrix(const std::string& s);

} // namespace hypodomain
