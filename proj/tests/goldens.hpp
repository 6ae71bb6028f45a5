#pragma once

// Reference data for the worked examples used across the test suites.

namespace goldens {

// Degree-10 border equation of the discrete family s^6 + (r + i p) s^5 + 3/2.
inline const char* kBorder10 =
    "9216*p^10 + 46080*p^8*r^2 + 92160*p^6*r^4 + 92160*p^4*r^6 + 46080*p^2*r^8 + 9216*r^10"
    " - 94464*p^8 - 377856*p^6*r^2 - 566784*p^4*r^4 - 377856*p^2*r^6 - 94464*r^8"
    " + 301440*p^6 + 683136*p^4*r^2 + 1051776*p^2*r^4 + 276864*r^6"
    " - 309600*p^4 - 619200*p^2*r^2 - 309600*r^4 + 122500*p^2 + 122500*r^2 - 15625";

// Quartic border of the complex quadratic family; splits into four lines.
inline const char* kBorder4 =
    "1008000*p^4 - 3303960*p^3*r + 1782100*p^2*r^2 + 978760*p*r^3 - 627300*r^4"
    " + 62160*p^3 + 1366648*p^2*r + 1219928*p*r^2 - 1200320*r^3"
    " - 1679328*p^2 + 630352*p*r - 145904*r^2 - 309120*p + 310272*r + 64512";

// The complex quadratic family itself (two transcription defects in the
// source display corrected: +4i in the s coefficient, 21 in the p^2 real
// part; overall sign normalized so the quartic above is its border).
inline const char* kFamily5 =
    "(-4 + 22*i)*s^2 + ((30 - 20*i)*r - (145 + 8*i)*p + 68 + 4*i)*s"
    " + (21 - 8*i)*r^2 - (21 + 13*i)*p^2 + (40 + 54*i)*r*p"
    " + (2 - 26*i)*r + (-34 + 19*i)*p - (8 + 6*i)";

inline const char* kFamily1 = "s^6 + (r + i*p)*s^5 + 3/2";
inline const char* kFamily2 = "s^6 + (r + i*p)*s^5 + 3/20";

}  // namespace goldens
