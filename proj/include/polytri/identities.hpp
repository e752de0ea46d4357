#pragma once

#include "polytri/color_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polytri {

enum class IdentityId {
    Symmetry,      // <k,n>_a = <k, mk-n>_{Ja}
    Absorption,    // n <k,n> = k sum_i i a_i <k-1, n-i>
    Vandermonde,   // sum_{i+j=n} <r,i><s,j> = <r+s,n>
    Addition,      // <k,n> = sum_i a_i <k-1, n-i>
    BinomialThm,   // sum_n <k,n> x^n y^{mk-n} = (sum_i a_i x^i y^{m-i})^k
    UpperSum,      // sum_{k<=p} a_0^{-k} <k,n> = sum_i a_0^{-i} alpha_{n,i} C(p+1, i+1)
    UpperNeg,      // <k,n> = sum_i a_0^{k-i} (-1)^i alpha_{n,i} C(i-k-1, i)
    RecurrenceN,   // n a_0 <k,n> = sum_l ((k+1)l - n) a_l <k, n-l>
    Pretty,        // sum_l <r,p+l>_{Ja} <s,n+l>_a = <r+s, mr-p+n>_a = <r+s, ms+p-n>_{Ja}
    Squares,       // sum_n <k,n>^2 = <2k, mk>   (palindromic a)
    MinOccShift,   // a_i = 0 for i < p  =>  <k,n>_a = <k, n-kp>_{(a_p..a_m)}
    GegenRec1,     // (2k-n-1)(2k-n)<k,n> = k(7k-3n-5)<k-1,n> - 3(k-1)k<k-2,n>
    GegenRec2,     // 2(k+1)<k,n> = (2k-n+2)<k+1,n> - (k+1)<k,n-1>
    GegenRec3,     // n(2k-n)<k,n> = k(2k-1)<k-1,n-1> + 3(k-1)k<k-2,n-2>
};

const std::vector<IdentityId>& all_identities();
std::string identity_tag(IdentityId id);
std::optional<IdentityId> parse_identity_tag(std::string_view tag);

struct Counterexample {
    std::string where;  // e.g. "k=3 n=4" or "r=2 s=1 p=0 n=2"
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    enum class Status { Passed, Failed, Rejected };

    IdentityId id;
    std::string tag;
    ColorVector colors;
    int k_max;
    Status status;
    std::string rejection_reason;  // set when status == Rejected
    std::vector<Counterexample> counterexamples;

    bool passed() const { return status == Status::Passed; }
};

/// Checks one identity exactly over its full (k, n) sweep up to k_max.
/// Precondition failures (a_0 = 0 where the identity divides by a_0,
/// non-palindromic a for Squares, non-(1,1,1) for the trinomial recurrences)
/// yield Status::Rejected with a reason, never a silent pass.
IdentityReport verify_identity(IdentityId id, const ColorVector& colors, int k_max);

}  // namespace polytri
