#pragma once

#include "rpx/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rpx {

// Row-vector convention throughout: an isometry acts as x -> x*M + t, and
// compose(A, B) applies A first, then B. This matches the order in which
// products like R0*R1 are written in the group-theory literature on
// crystallographic symmetry.
using Mat3 = Eigen::Matrix<Int, 3, 3>;
using Vec3 = Eigen::Matrix<Rat, 1, 3>;
using Vec3I = Eigen::Matrix<Int, 1, 3>;

enum class ErrorCode {
    invalid_matrix,
    invalid_generator,
    invalid_element,
    precondition_violation,
    degenerate_face,
    trace_overflow,
    boundary_artifact,
    resource_limit,
    reconstruction_failure,
    reconstruction_ambiguous,
    schema,
    unknown_entry,
    unknown_label,
    mismatched_boxes,
    degenerate_box,
    unsupported,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline Vec3 vec3(Rat x, Rat y, Rat z)
{
    Vec3 v;
    v << x, y, z;
    return v;
}

inline Vec3I vec3i(Int x, Int y, Int z)
{
    Vec3I v;
    v << x, y, z;
    return v;
}

inline Vec3 to_rat(const Vec3I& v) { return vec3(Rat(v[0]), Rat(v[1]), Rat(v[2])); }

bool lex_less(const Vec3& a, const Vec3& b);
inline bool lex_less_eq(const Vec3& a, const Vec3& b) { return !lex_less(b, a); }

// Divides out the gcd and flips the sign so the first nonzero entry is
// positive. Zero vector stays zero.
Vec3I primitive(Vec3I v);

std::string vec_to_string(const Vec3& v);

// A 3x3 signed permutation matrix: exactly one entry of +-1 per row and
// column. These are precisely the orthogonal integer matrices, i.e. the
// elements of the full octahedral group in standard coordinates.
bool is_signed_permutation(const Mat3& m);
void require_signed_permutation(const Mat3& m);

// All 48 signed permutation matrices, in a fixed deterministic order.
const std::vector<Mat3>& all_signed_permutations();

int matrix_order(const Mat3& m);  // order as a group element (1,2,3,4 or 6)

struct Isometry {
    Mat3 linear;       // signed permutation
    Vec3 translation;  // exact rational

    static Isometry identity();
};

Isometry make_isometry(const Mat3& linear, const Vec3& translation);
inline Isometry make_linear(const Mat3& m) { return make_isometry(m, vec3(0, 0, 0)); }

bool operator==(const Isometry& a, const Isometry& b);
inline bool operator!=(const Isometry& a, const Isometry& b) { return !(a == b); }

Vec3 apply(const Isometry& iso, const Vec3& v);
Isometry compose(const Isometry& a, const Isometry& b);  // apply a, then b
Isometry inverse(const Isometry& iso);
bool is_identity(const Isometry& iso);
bool is_involution(const Isometry& iso);

// Dimension of the affine fixed-point set {v : v*M + t = v}, or nullopt when
// the set is empty (twists, glides, translations).
std::optional<int> fixed_space_dimension(const Isometry& iso);

// One point of the fixed set, if nonempty.
std::optional<Vec3> fixed_point(const Isometry& iso);

enum class AngleClass { zero, pi, two_pi_three, pi_half };

struct RotationData {
    bool proper = true;
    int order = 1;                // order of the matrix itself
    AngleClass angle_class = AngleClass::zero;  // of the proper part
    std::optional<Vec3I> axis;    // primitive axis direction of the proper part
};

// For proper M reports its rotation order/axis; for improper M reports
// proper=false together with the data of -M.
RotationData rotation_data(const Mat3& m);

// Serialization key for hashing/maps: 9 matrix entries + 6 rational limbs.
using IsometryKey = std::array<Int, 15>;
IsometryKey isometry_key(const Isometry& iso);

std::string to_string(const Isometry& iso);

// Axis-aligned integer box [lo, hi] per coordinate (closed).
struct IBox {
    Vec3I lo;
    Vec3I hi;

    bool valid() const { return lo[0] <= hi[0] && lo[1] <= hi[1] && lo[2] <= hi[2]; }
    bool contains(const Vec3& p) const;
    IBox inflated(Int k) const;
    IBox shrunk(Int k) const;
};

inline IBox ibox(Int lo, Int hi) { return IBox{vec3i(lo, lo, lo), vec3i(hi, hi, hi)}; }
bool operator==(const IBox& a, const IBox& b);
std::string to_string(const IBox& b);

}  // namespace rpx
