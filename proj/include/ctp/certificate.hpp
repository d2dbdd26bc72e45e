#pragma once

// Farkas-style infeasibility certificates for the linear systems that bound
// how long a deterministic strategy can keep its ratio below 9 - 2*eps.
// A certificate is a nonnegative vector y with M^T y >= 0 and b'^T y < 0,
// which proves that the system M x <= b' has no nonnegative solution.

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctp/error.hpp"
#include "ctp/rational.hpp"

namespace ctp {

// The j x j system: M is lower triangular with unit diagonal and all
// entries below the subdiagonal equal to 1, while the subdiagonal itself
// carries -(3 - eps).  b = (8 - 2*eps) * ones, and bPrime = b - M * ones
// shifts the system so x >= 0 becomes the natural variable domain.
struct FarkasSystem {
    long j = 0;
    Rat eps;
    std::vector<std::vector<Rat>> m;  // row-major, j x j
    std::vector<Rat> b;
    std::vector<Rat> bPrime;
};

inline FarkasSystem buildSystem(long j, const Rat& eps) {
    if (j < 1) fail(ErrorCode::InvalidJ, "system dimension must be positive");
    if (eps < 0) fail(ErrorCode::UsageError, "eps must be nonnegative");
    FarkasSystem sys;
    sys.j = j;
    sys.eps = eps;
    sys.m.assign(static_cast<size_t>(j), std::vector<Rat>(static_cast<size_t>(j), Rat(0)));
    const Rat sub = -(Rat(3) - eps);
    for (long r = 0; r < j; ++r) {
        for (long c = 0; c < j; ++c) {
            if (c > r) continue;
            Rat v;
            if (c == r)
                v = 1;
            else if (c == r - 1)
                v = sub;
            else
                v = 1;
            sys.m[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        }
    }
    sys.b.assign(static_cast<size_t>(j), Rat(8) - 2 * eps);
    sys.bPrime.resize(static_cast<size_t>(j));
    for (long r = 0; r < j; ++r) {
        Rat rowSum = 0;
        for (long c = 0; c < j; ++c) rowSum += sys.m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        sys.bPrime[static_cast<size_t>(r)] = sys.b[static_cast<size_t>(r)] - rowSum;
    }
    return sys;
}

struct Certificate {
    long j = 0;
    Rat eps;
    std::vector<Rat> y;       // clamped multipliers, y[i] corresponds to row i+1
    int leadingNegatives = 0;  // length of the negative prefix before clamping
};

// Builds the multiplier vector from the linear recurrence
//   u_0 = 1, u_1 = 3 - eps, u_{n+2} = (4 - eps) (u_{n+1} - u_n),
// read back to front: y_i = u_{j-i}.  The raw vector must consist of a
// nonempty strictly negative prefix of length at most 11 followed by a
// strictly positive tail; the prefix is then clamped to zero.
inline Certificate constructY(long j, const Rat& eps) {
    if (j < 2) fail(ErrorCode::InvalidJ, "certificate needs dimension at least 2");
    std::vector<Rat> u;
    u.reserve(static_cast<size_t>(j) + 1);
    u.push_back(Rat(1));
    u.push_back(Rat(3) - eps);
    const Rat mult = Rat(4) - eps;
    while (static_cast<long>(u.size()) <= j) {
        Rat next = mult * (u[u.size() - 1] - u[u.size() - 2]);
        u.push_back(next);
    }
    std::vector<Rat> raw(static_cast<size_t>(j));
    for (long i = 1; i <= j; ++i) raw[static_cast<size_t>(i - 1)] = u[static_cast<size_t>(j - i)];

    size_t lead = 0;
    while (lead < raw.size() && raw[lead] < 0) ++lead;
    std::string signs;
    for (const Rat& v : raw) signs += v < 0 ? '-' : (v > 0 ? '+' : '0');
    if (lead == 0 || lead > 11)
        fail(ErrorCode::InvalidJ,
             "sign pattern " + signs + " lacks a usable negative prefix for j=" + std::to_string(j));
    for (size_t i = lead; i < raw.size(); ++i)
        if (!(raw[i] > 0))
            fail(ErrorCode::InvalidJ,
                 "sign pattern " + signs + " is not positive past the prefix for j=" + std::to_string(j));

    Certificate cert;
    cert.j = j;
    cert.eps = eps;
    cert.leadingNegatives = static_cast<int>(lead);
    cert.y = std::move(raw);
    for (size_t i = 0; i < lead; ++i) cert.y[i] = 0;
    return cert;
}

// Exact verification: y >= 0, M^T y >= 0 componentwise, and bPrime . y < 0.
inline bool verifyCertificate(const Certificate& cert) {
    FarkasSystem sys = buildSystem(cert.j, cert.eps);
    if (static_cast<long>(cert.y.size()) != sys.j)
        fail(ErrorCode::DimensionMismatch,
             "certificate has " + std::to_string(cert.y.size()) + " entries for a " +
                 std::to_string(sys.j) + "-row system");
    for (const Rat& v : cert.y)
        if (v < 0) return false;
    for (long c = 0; c < sys.j; ++c) {
        Rat col = 0;
        for (long r = 0; r < sys.j; ++r)
            col += sys.m[static_cast<size_t>(r)][static_cast<size_t>(c)] * cert.y[static_cast<size_t>(r)];
        if (col < 0) return false;
    }
    Rat obj = 0;
    for (long r = 0; r < sys.j; ++r) obj += sys.bPrime[static_cast<size_t>(r)] * cert.y[static_cast<size_t>(r)];
    return obj < 0;
}

// Picks the system dimension for a given eps.  The oscillation period of the
// recurrence gives a closed-form first guess; nearby dimensions are probed in
// a fixed order until one produces a verifying certificate.
inline long chooseJ(const Rat& eps) {
    if (!(eps > 0) || !(eps < 1)) fail(ErrorCode::UsageError, "eps must lie strictly between 0 and 1");
    const double e = ratToDouble(eps);
    const double alpha = std::atan(std::sqrt(e / (4.0 - e)));
    const double beta = std::atan((2.0 - e) / std::sqrt(e * (4.0 - e)));
    const long seed = static_cast<long>(std::floor(10.0 + (std::acos(0.0) + beta) / alpha)) + 1;
    const long offsets[] = {0, 1, -1, 2, -2};
    for (long off : offsets) {
        long j = seed + off;
        if (j < 2) continue;
        try {
            Certificate cert = constructY(j, eps);
            if (verifyCertificate(cert)) return j;
        } catch (const Error& err) {
            if (err.code() != ErrorCode::InvalidJ) throw;
        }
    }
    fail(ErrorCode::InvalidJ, "no verifying dimension near the seed " + std::to_string(seed));
}

inline nlohmann::json certificateToJson(const Certificate& cert) {
    nlohmann::json out;
    out["j"] = cert.j;
    out["eps"] = ratStr(cert.eps);
    out["leadingNegatives"] = cert.leadingNegatives;
    nlohmann::json ys = nlohmann::json::array();
    for (const Rat& v : cert.y) ys.push_back(ratStr(v));
    out["y"] = std::move(ys);
    return out;
}

}  // namespace ctp
