#pragma once

#include "rpx/generator_set.hpp"

#include <initializer_list>

namespace rpx::fixtures {

inline Mat3 mat(std::initializer_list<Int> v)
{
    Mat3 m;
    auto it = v.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = *it++;
    return m;
}

inline Isometry iso(std::initializer_list<Int> rows, Vec3 t = vec3(0, 0, 0))
{
    return make_isometry(mat(rows), t);
}

// (x,y,z) -> (-x,y,-z) + (a,0,a); (-x,z,y); (z,y,x); (x,-y,z)
inline GeneratorSet k5_11()
{
    Isometry r0 = iso({-1, 0, 0, 0, 1, 0, 0, 0, -1}, vec3(1, 0, 1));
    Isometry r1 = iso({-1, 0, 0, 0, 0, 1, 0, 1, 0});
    Isometry r2 = iso({0, 0, 1, 0, 1, 0, 1, 0, 0});
    Isometry r2hat = iso({1, 0, 0, 0, -1, 0, 0, 0, 1});
    return make_generator_set(r0, r1, {r2, r2hat}, vec3(0, 0, 0),
                              {{"R2", r2}, {"R2hat", r2hat}});
}

// (x,y,z) -> (-x,z,y) + (a,a,-a); (-x,y,-z); S: (y,-z,-x)
inline GeneratorSet k6_11()
{
    Isometry r0 = iso({-1, 0, 0, 0, 0, 1, 0, 1, 0}, vec3(1, 1, -1));
    Isometry r1 = iso({-1, 0, 0, 0, 1, 0, 0, 0, -1});
    Isometry s = iso({0, 0, -1, 1, 0, 0, 0, -1, 0});
    return make_generator_set(r0, r1, {s}, vec3(0, 0, 0), {{"S", s}});
}

// (x,y,z) -> (-y,-x,-z) + (0,0,a); (-z,-y,-x); S: (-y,x,z)
inline GeneratorSet k7_11()
{
    Isometry r0 = iso({0, -1, 0, -1, 0, 0, 0, 0, -1}, vec3(0, 0, 1));
    Isometry r1 = iso({0, 0, -1, 0, -1, 0, -1, 0, 0});
    Isometry s = iso({0, 1, 0, -1, 0, 0, 0, 0, 1});
    return make_generator_set(r0, r1, {s}, vec3(0, 0, 0), {{"S", s}});
}

// (x,y,z) -> (-y,-x,-z) + (a,a,0); (-z,-y,-x); (x,y,-z); (y,x,z)
inline GeneratorSet k8_11()
{
    Isometry r0 = iso({0, -1, 0, -1, 0, 0, 0, 0, -1}, vec3(1, 1, 0));
    Isometry r1 = iso({0, 0, -1, 0, -1, 0, -1, 0, 0});
    Isometry r2 = iso({1, 0, 0, 0, 1, 0, 0, 0, -1});
    Isometry r2hat = iso({0, 1, 0, 1, 0, 0, 0, 0, 1});
    return make_generator_set(r0, r1, {r2, r2hat}, vec3(0, 0, 0),
                              {{"R2", r2}, {"R2hat", r2hat}});
}

// (x,y,z) -> (-y,-x,-z) + (a,a,-a); (-z,-y,-x); S: (-z,x,-y).
// The twin vertex is (a,a,-a): the translation printed with the half-turn
// must land in the body-centered vertex set.
inline GeneratorSet k9_11()
{
    Isometry r0 = iso({0, -1, 0, -1, 0, 0, 0, 0, -1}, vec3(1, 1, -1));
    Isometry r1 = iso({0, 0, -1, 0, -1, 0, -1, 0, 0});
    Isometry s = iso({0, 1, 0, 0, 0, -1, -1, 0, 0});
    return make_generator_set(r0, r1, {s}, vec3(0, 0, 0), {{"S", s}});
}

}  // namespace rpx::fixtures
