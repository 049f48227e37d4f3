#include "cpgraph/correspondence.hpp"

#include <algorithm>
#include <cmath>

#include "cpgraph/errors.hpp"

namespace cpgraph {

VertexWeights::VertexWeights(const Graph& g, std::vector<double> weights)
    : graph_(&g), weights_(std::move(weights)) {
    if (weights_.size() != g.vertex_count()) {
        throw ArgumentError("vertex weights: expected " + std::to_string(g.vertex_count()) + " values, got " +
                            std::to_string(weights_.size()));
    }
    for (VertexIndex v = 0; v < weights_.size(); ++v) {
        if (!std::isfinite(weights_[v]) || weights_[v] < 0.0) {
            throw ArgumentError("vertex weight for '" + g.vertex_id(v) + "' must be a finite nonnegative number");
        }
    }
}

VertexWeights VertexWeights::zero(const Graph& g) { return VertexWeights(g, std::vector<double>(g.vertex_count())); }

VertexWeights VertexWeights::indicator(const Graph& g, const VertexSubset& support) {
    std::vector<double> w(g.vertex_count(), 0.0);
    for (auto v : support.members()) w.at(v) = 1.0;
    return VertexWeights(g, std::move(w));
}

double VertexWeights::sup_norm() const {
    if (weights_.empty()) return 0.0;
    return *std::max_element(weights_.begin(), weights_.end());
}

PathVector::PathVector(const Graph& g, std::size_t length) : graph_(&g), length_(length) {
    if (length == 0) throw ArgumentError("path vectors need a positive length");
}

PathVector PathVector::delta(const Graph& g, const Path& alpha) {
    PathVector x(g, alpha.length());
    x.set(alpha, 1.0);
    return x;
}

Complex PathVector::operator()(const Path& p) const {
    auto it = weights_.find(p);
    return it == weights_.end() ? Complex{} : it->second;
}

void PathVector::set(const Path& p, Complex value) {
    if (p.length() != length_) throw ArgumentError("path length does not match the vector's tensor degree");
    if (!is_path(*graph_, p.edges)) throw ArgumentError("not a path of the vector's graph");
    if (value == Complex{}) {
        weights_.erase(p);
    } else {
        weights_[p] = value;
    }
}

void PathVector::add(const Path& p, Complex value) { set(p, (*this)(p) + value); }

void PathVector::require_compatible(const PathVector& other) const {
    if (graph_ != other.graph_) throw ArgumentError("path vectors belong to different graphs");
    if (length_ != other.length_) throw ArgumentError("path vectors have different lengths");
}

PathVector PathVector::operator+(const PathVector& other) const {
    require_compatible(other);
    PathVector sum = *this;
    for (const auto& [p, w] : other.weights_) sum.add(p, w);
    return sum;
}

PathVector PathVector::scaled(Complex factor) const {
    PathVector out(*graph_, length_);
    for (const auto& [p, w] : weights_) out.set(p, w * factor);
    return out;
}

bool PathVector::operator==(const PathVector& other) const {
    return graph_ == other.graph_ && length_ == other.length_ && weights_ == other.weights_;
}

std::vector<Complex> inner_product(const PathVector& x, const PathVector& y) {
    if (&x.graph() != &y.graph()) throw ArgumentError("path vectors belong to different graphs");
    if (x.length() != y.length()) throw ArgumentError("path vectors have different lengths");
    const Graph& g = x.graph();
    std::vector<Complex> out(g.vertex_count());
    for (const auto& [p, xv] : x.weights()) {
        out[path_range(g, p)] += std::conj(xv) * y(p);
    }
    return out;
}

PathVector left_action(const VertexWeights& a, const PathVector& x) {
    if (&a.graph() != &x.graph()) throw ArgumentError("weights and vector belong to different graphs");
    const Graph& g = x.graph();
    PathVector out(g, x.length());
    for (const auto& [p, w] : x.weights()) out.set(p, a(path_source(g, p)) * w);
    return out;
}

double norm(const PathVector& x) {
    double best = 0.0;
    for (const auto& value : inner_product(x, x)) best = std::max(best, value.real());
    return std::sqrt(best);
}

std::optional<Path> operator_sandwich(const Graph& g, const Path& alpha, const Path& beta) {
    if (!is_path(g, alpha.edges) || !is_path(g, beta.edges)) throw ArgumentError("sandwich arguments must be paths");
    const auto m = alpha.length();
    const auto k = beta.length();
    if (k >= m) throw ArgumentError("sandwich needs a middle path shorter than the outer path");
    if (path_range(g, beta) != path_source(g, alpha)) return std::nullopt;

    // beta.alpha, then compare its first m edges with alpha.
    std::vector<EdgeIndex> product = beta.edges;
    product.insert(product.end(), alpha.edges.begin(), alpha.edges.end());
    if (!std::equal(alpha.edges.begin(), alpha.edges.end(), product.begin())) return std::nullopt;
    return Path{std::vector<EdgeIndex>(product.begin() + static_cast<std::ptrdiff_t>(m), product.end())};
}

bool is_nonreturning_vector(const Graph& g, const Path& alpha) {
    if (!is_path(g, alpha.edges)) throw ArgumentError("not a path of the graph");
    for (std::size_t k = 1; k < alpha.length(); ++k) {
        Path prefix{std::vector<EdgeIndex>(alpha.edges.begin(), alpha.edges.begin() + static_cast<std::ptrdiff_t>(k))};
        if (operator_sandwich(g, alpha, prefix)) return false;
    }
    return true;
}

} // namespace cpgraph
