#pragma once

// Inline copies of the bundled example matrices plus a tiny text
// constructor for test inputs.

#include <sstream>

#include "maxplus/io.hpp"
#include "maxplus/matrix.hpp"

namespace fixtures {

using maxplus::Matrix;
using maxplus::Trop;
using maxplus::Vector;

inline Matrix from_text(const std::string& text) {
    std::istringstream in(text);
    return maxplus::io::read_matrix(in);
}

inline Vector vec(std::initializer_list<long> xs) {
    Vector v(static_cast<int>(xs.size()));
    int i = 0;
    for (long x : xs) v[i++] = Trop(x);
    return v;
}

// 3x3, -1 diagonal: tropical rank 2, row/col rank 3, ultimate rank 1
inline Matrix ex3_9_A() {
    return from_text("3 3  -1 0 0  0 -1 0  0 0 -1");
}

// 4x4: tropical rank 3, row rank 3, column rank 4 (the three notions split)
inline Matrix ex3_9_B() {
    return from_text("4 4  2 1 0 -1  -2 -1 0 1  0 0 0 0  0 0 0 0");
}

// 4x4 whose powers keep column rank 4 and tropical rank 3 but whose
// projective orbit never closes; the entrywise limit has all ranks 2
inline Matrix ex5_1_A() {
    return from_text("4 4  0 -1 0 -1  -1 0 -1 0  . . -1 -1  . . -1 -1");
}

inline Matrix ex5_1_limit() {
    return from_text("4 4  0 -1 0 -1  -1 0 -1 0  . . . .  . . . .");
}

inline Matrix a1() { return from_text("3 3  0 -2 -2  -2 0 -2  -2 -2 0"); }
inline Matrix a2() { return from_text("3 3  0 -5 -2  1 0 1  -2 -5 0"); }
inline Matrix b1() { return a1(); }
inline Matrix b2() { return from_text("3 3  0 -5 -1  1 0 2  -3 -6 0"); }
inline Matrix c1() { return from_text("3 3  -2 0 -2  -2 -2 0  0 -2 -2"); }
inline Matrix c2() { return from_text("3 3  -1 0 -1  -1 -1 0  0 -1 -1"); }
inline Matrix d1() { return c1(); }
inline Matrix d2() { return from_text("3 3  -1 0.2 -0.8  -1.2 -1 0  -0.2 -1 -1"); }

} // namespace fixtures
