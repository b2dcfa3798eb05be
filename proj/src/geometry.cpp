#include "rpx/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rpx {

std::string rat_to_string(const Rat& q)
{
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1)
        os << '/' << q.denominator();
    return os.str();
}

Rat rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(std::stoll(s));
        Int num = std::stoll(s.substr(0, slash));
        Int den = std::stoll(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

std::string rat_to_decimal_string(const Rat& q)
{
    Int den = q.denominator();
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        throw Error(ErrorCode::unsupported,
                    "no finite decimal expansion for " + rat_to_string(q));
    // Scale to 10^k with k = max(twos, fives).
    int k = std::max(twos, fives);
    Int num = q.numerator();
    Int scale = 1;
    for (int i = 0; i < k; ++i)
        scale *= 10;
    Int scaled = num * (scale / q.denominator());
    bool neg = scaled < 0;
    if (neg)
        scaled = -scaled;
    Int ip = scaled / scale, fp = scaled % scale;
    std::ostringstream os;
    if (neg)
        os << '-';
    os << ip;
    if (k > 0) {
        std::string frac = std::to_string(fp);
        frac.insert(frac.begin(), k - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        if (!frac.empty())
            os << '.' << frac;
    }
    return os.str();
}

bool lex_less(const Vec3& a, const Vec3& b)
{
    for (int i = 0; i < 3; ++i) {
        if (a[i] < b[i])
            return true;
        if (b[i] < a[i])
            return false;
    }
    return false;
}

Vec3I primitive(Vec3I v)
{
    Int g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g == 0)
        return v;
    v /= g;
    for (int i = 0; i < 3; ++i) {
        if (v[i] != 0) {
            if (v[i] < 0)
                v = -v;
            break;
        }
    }
    return v;
}

std::string vec_to_string(const Vec3& v)
{
    return "(" + rat_to_string(v[0]) + "," + rat_to_string(v[1]) + "," + rat_to_string(v[2]) + ")";
}

bool is_signed_permutation(const Mat3& m)
{
    for (int i = 0; i < 3; ++i) {
        int row_nz = 0, col_nz = 0;
        for (int j = 0; j < 3; ++j) {
            Int r = m(i, j), c = m(j, i);
            if (r != 0) {
                if (r != 1 && r != -1)
                    return false;
                ++row_nz;
            }
            if (c != 0)
                ++col_nz;
        }
        if (row_nz != 1 || col_nz != 1)
            return false;
    }
    return true;
}

void require_signed_permutation(const Mat3& m)
{
    if (!is_signed_permutation(m)) {
        std::ostringstream os;
        os << "matrix is not a signed permutation (orthogonal integer) matrix:\n" << m;
        throw Error(ErrorCode::invalid_matrix, os.str());
    }
}

const std::vector<Mat3>& all_signed_permutations()
{
    static const std::vector<Mat3> all = [] {
        std::vector<Mat3> out;
        int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perm)
            for (int s = 0; s < 8; ++s) {
                Mat3 m = Mat3::Zero();
                for (int i = 0; i < 3; ++i)
                    m(i, p[i]) = (s >> i) & 1 ? -1 : 1;
                out.push_back(m);
            }
        return out;
    }();
    return all;
}

int matrix_order(const Mat3& m)
{
    Mat3 p = m;
    for (int k = 1; k <= 6; ++k) {
        if (p == Mat3::Identity())
            return k;
        p = p * m;
    }
    throw Error(ErrorCode::invalid_matrix, "matrix order exceeds 6");
}

Isometry Isometry::identity() { return {Mat3::Identity(), vec3(0, 0, 0)}; }

Isometry make_isometry(const Mat3& linear, const Vec3& translation)
{
    require_signed_permutation(linear);
    return Isometry{linear, translation};
}

bool operator==(const Isometry& a, const Isometry& b)
{
    return a.linear == b.linear && a.translation == b.translation;
}

Vec3 apply(const Isometry& iso, const Vec3& v)
{
    Vec3 out = iso.translation;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (Int c = iso.linear(i, j); c != 0)
                out[j] += (c == 1) ? v[i] : -v[i];
    return out;
}

Isometry compose(const Isometry& a, const Isometry& b)
{
    Isometry out;
    out.linear = a.linear * b.linear;
    out.translation = apply(b, a.translation);
    return out;
}

Isometry inverse(const Isometry& iso)
{
    Isometry out;
    out.linear = iso.linear.transpose();  // orthogonal
    Isometry lin_inv{out.linear, vec3(0, 0, 0)};
    out.translation = -apply(lin_inv, iso.translation);
    return out;
}

bool is_identity(const Isometry& iso)
{
    return iso.linear == Mat3::Identity() && iso.translation == vec3(0, 0, 0);
}

bool is_involution(const Isometry& iso)
{
    return !is_identity(iso) && is_identity(compose(iso, iso));
}

namespace {

// Solves the affine fixed-point system v*(M - I) = -t exactly.
// Returns {dimension, particular solution} or nullopt when inconsistent.
struct AffineFix {
    int dim;
    Vec3 point;
};

std::optional<AffineFix> solve_fixed(const Isometry& iso)
{
    // Transpose to a column system: (M - I)^T x = -t^T.
    Rat a[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            a[i][j] = Rat(iso.linear(j, i)) - Rat(i == j ? 1 : 0);
        a[i][3] = -iso.translation[i];
    }
    int rank = 0;
    int pivot_col[3] = {-1, -1, -1};
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (a[r][col] != Rat(0)) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[piv], a[rank]);
        Rat d = a[rank][col];
        for (int j = col; j < 4; ++j)
            a[rank][j] /= d;
        for (int r = 0; r < 3; ++r)
            if (r != rank && a[r][col] != Rat(0)) {
                Rat f = a[r][col];
                for (int j = col; j < 4; ++j)
                    a[r][j] -= f * a[rank][j];
            }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < 3; ++r)
        if (a[r][3] != Rat(0))
            return std::nullopt;
    Vec3 point = vec3(0, 0, 0);
    for (int r = 0; r < rank; ++r)
        point[pivot_col[r]] = a[r][3];
    return AffineFix{3 - rank, point};
}

}  // namespace

std::optional<int> fixed_space_dimension(const Isometry& iso)
{
    auto fix = solve_fixed(iso);
    if (!fix)
        return std::nullopt;
    return fix->dim;
}

std::optional<Vec3> fixed_point(const Isometry& iso)
{
    auto fix = solve_fixed(iso);
    if (!fix)
        return std::nullopt;
    return fix->point;
}

RotationData rotation_data(const Mat3& m)
{
    require_signed_permutation(m);
    RotationData out;
    out.proper = m.determinant() > 0;
    out.order = matrix_order(m);
    Mat3 p = out.proper ? m : Mat3(-m);
    int p_order = matrix_order(p);
    switch (p_order) {
        case 1: out.angle_class = AngleClass::zero; break;
        case 2: out.angle_class = AngleClass::pi; break;
        case 3: out.angle_class = AngleClass::two_pi_three; break;
        case 4: out.angle_class = AngleClass::pi_half; break;
        default:
            throw Error(ErrorCode::invalid_matrix, "unexpected proper rotation order");
    }
    if (p_order > 1) {
        // Axis = fixed line of p: kernel of (p - I), via cross product of two
        // independent rows of (p - I)^T (columns of p - I).
        Mat3 d = p - Mat3::Identity();
        Vec3I c0 = vec3i(d(0, 0), d(1, 0), d(2, 0));
        Vec3I c1 = vec3i(d(0, 1), d(1, 1), d(2, 1));
        Vec3I c2 = vec3i(d(0, 2), d(1, 2), d(2, 2));
        auto cross = [](const Vec3I& a, const Vec3I& b) {
            return vec3i(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                         a[0] * b[1] - a[1] * b[0]);
        };
        Vec3I ax = cross(c0, c1);
        if (ax == Vec3I::Zero())
            ax = cross(c0, c2);
        if (ax == Vec3I::Zero())
            ax = cross(c1, c2);
        out.axis = primitive(ax);
    }
    return out;
}

IsometryKey isometry_key(const Isometry& iso)
{
    IsometryKey k{};
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            k[n++] = iso.linear(i, j);
    for (int i = 0; i < 3; ++i) {
        k[n++] = iso.translation[i].numerator();
        k[n++] = iso.translation[i].denominator();
    }
    return k;
}

std::string to_string(const Isometry& iso)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < 3; ++j)
            os << (j ? "," : "") << iso.linear(i, j);
    }
    os << "] + " << vec_to_string(iso.translation);
    return os.str();
}

bool IBox::contains(const Vec3& p) const
{
    for (int i = 0; i < 3; ++i)
        if (p[i] < Rat(lo[i]) || Rat(hi[i]) < p[i])
            return false;
    return true;
}

IBox IBox::inflated(Int k) const
{
    return IBox{vec3i(lo[0] - k, lo[1] - k, lo[2] - k), vec3i(hi[0] + k, hi[1] + k, hi[2] + k)};
}

IBox IBox::shrunk(Int k) const { return inflated(-k); }

bool operator==(const IBox& a, const IBox& b) { return a.lo == b.lo && a.hi == b.hi; }

std::string to_string(const IBox& b)
{
    std::ostringstream os;
    os << "[" << b.lo[0] << ":" << b.hi[0] << "," << b.lo[1] << ":" << b.hi[1] << "," << b.lo[2]
       << ":" << b.hi[2] << "]";
    return os.str();
}

}  // namespace rpx
