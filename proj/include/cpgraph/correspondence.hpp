#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cpgraph/graph.hpp"
#include "cpgraph/paths.hpp"

namespace cpgraph {

// Discrete model of the graph correspondence X(E) over C(E^0) and its tensor
// powers X(E)^{(x)m} = X(E^{xm}). Vectors are finitely supported functions on
// paths of one length; vertex functions act on the left through the source and
// on the inner product through the range.

using Complex = std::complex<double>;

/// Positive element a of C(E^0): one nonnegative weight per vertex.
/// Holds a pointer to its graph, which must outlive it.
class VertexWeights {
public:
    /// Throws ArgumentError on a size mismatch or a negative / non-finite weight.
    VertexWeights(const Graph& g, std::vector<double> weights);

    static VertexWeights zero(const Graph& g);
    static VertexWeights indicator(const Graph& g, const VertexSubset& support);

    const Graph& graph() const noexcept { return *graph_; }
    double operator()(VertexIndex v) const { return weights_.at(v); }
    const std::vector<double>& values() const noexcept { return weights_; }
    /// max_v a(v), 0 for the empty graph.
    double sup_norm() const;
    bool is_zero() const { return sup_norm() == 0.0; }

private:
    const Graph* graph_;
    std::vector<double> weights_;
};

/// Element of X(E)^{(x)m}: complex weights on paths of length m.
/// Zero weights are not stored.
class PathVector {
public:
    PathVector(const Graph& g, std::size_t length);

    /// delta_alpha.
    static PathVector delta(const Graph& g, const Path& alpha);

    const Graph& graph() const noexcept { return *graph_; }
    std::size_t length() const noexcept { return length_; }
    const std::map<Path, Complex>& weights() const noexcept { return weights_; }
    Complex operator()(const Path& p) const;

    /// Throws ArgumentError if p has the wrong length or is not a path of the graph.
    void set(const Path& p, Complex value);
    void add(const Path& p, Complex value);

    PathVector operator+(const PathVector& other) const;
    PathVector scaled(Complex factor) const;
    bool operator==(const PathVector& other) const;

private:
    void require_compatible(const PathVector& other) const;

    const Graph* graph_;
    std::size_t length_;
    std::map<Path, Complex> weights_;
};

/// <x, y>(v) = sum over paths alpha with r(alpha) = v of conj(x(alpha)) y(alpha),
/// one entry per vertex. Throws ArgumentError on graph or length mismatch.
std::vector<Complex> inner_product(const PathVector& x, const PathVector& y);

/// (a . x)(alpha) = a(s(alpha)) x(alpha).
PathVector left_action(const VertexWeights& a, const PathVector& x);

/// ||x|| = sqrt(max_v <x, x>(v)).
double norm(const PathVector& x);

/// Shadow of S_alpha^* S_beta S_alpha for |beta| = k < m = |alpha|. The
/// product is S_gamma when beta.alpha is composable and begins with alpha,
/// gamma being the last k edges of beta.alpha; otherwise it vanishes.
/// Throws ArgumentError when k >= m or either argument is not a path of g.
std::optional<Path> operator_sandwich(const Graph& g, const Path& alpha, const Path& beta);

/// delta_alpha is a nonreturning vector: every sandwich with a middle path of
/// length 1..m-1 vanishes. Only the k-prefix of alpha can give a nonzero
/// sandwich, so one check per k is exhaustive. True for m = 1.
bool is_nonreturning_vector(const Graph& g, const Path& alpha);

} // namespace cpgraph
