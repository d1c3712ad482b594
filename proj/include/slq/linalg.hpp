#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace slq {

/// Dense symmetric matrix in row-major order.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

/// Cyclic Jacobi eigensolver. Returns all eigenvalues in ascending order;
/// when vectors is non-null its columns hold the matching eigenvectors.
inline std::vector<double> jacobi_eigenvalues(SymMatrix m, std::vector<std::vector<double>>* vectors = nullptr) {
    int n = m.n;
    std::vector<std::vector<double>> v;
    if (vectors) {
        v.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    }
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m.at(i, j) * m.at(i, j);
        if (off <= 1e-26 * (n ? n : 1)) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (m.at(q, q) - m.at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = m.at(k, p), akq = m.at(k, q);
                    m.at(k, p) = c * akp - s * akq;
                    m.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = m.at(p, k), aqk = m.at(q, k);
                    m.at(p, k) = c * apk - s * aqk;
                    m.at(q, k) = s * apk + c * aqk;
                }
                if (vectors)
                    for (int k = 0; k < n; ++k) {
                        double vkp = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                        double vkq = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
                        v[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * vkp - s * vkq;
                        v[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * vkp + c * vkq;
                    }
            }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return m.at(i, i) < m.at(j, j); });
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = m.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    if (vectors) {
        vectors->assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
        for (int col = 0; col < n; ++col)
            for (int k = 0; k < n; ++k)
                (*vectors)[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)] =
                    v[static_cast<std::size_t>(k)][static_cast<std::size_t>(order[static_cast<std::size_t>(col)])];
    }
    return eig;
}

} // namespace slq
