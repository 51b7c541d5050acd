#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankel/bernstein/corner.hpp"

namespace hankel::bernstein {

enum class NodeStatus { coeff_positive, subdivided, corner_certified, failed };

std::string to_string(NodeStatus s);
NodeStatus node_status_from_string(const std::string& s);

struct CornerData {
    CornerPoint corner;
    Rational half_width;
    Rational lambda;
    Rational tail_sum;
    Rational margin;
};

/// Lattice point minimizing F on a failed leaf.
struct Witness {
    Rational p;
    Rational x;
    Rational value;
};

struct CertNode {
    explicit CertNode(Box b, int d = 0) : box(std::move(b)), depth(d) {}

    Box box;
    int depth;
    NodeStatus status = NodeStatus::failed;
    Rational min_bcoeff;
    Rational max_bcoeff;
    std::optional<CornerData> corner;
    std::optional<Witness> witness;
    std::vector<CertNode> children;  // 4 (subdivided) or 0

    bool is_leaf() const { return children.empty(); }
};

/// Branch-and-bound tree for F > 0 on a box. With no failed leaf, F >= 0 on
/// the root box and F = 0 only possibly at the declared corner.
struct PositivityCertificate {
    BiPoly poly;
    CertNode root;
    int max_depth = 0;
    std::optional<CornerPoint> declared_corner;

    bool succeeded() const;
    /// Leaves in canonical depth-first order.
    std::vector<const CertNode*> leaves() const;
    std::size_t count(NodeStatus s) const;
};

struct CertifyOptions {
    int max_depth = 0;
    std::optional<CornerPoint> corner;
    /// Certify the subtrees of the first levels on worker threads. The
    /// resulting tree is identical to the sequential one.
    bool parallel = false;
};

/// Side of the lattice used for failed-leaf witnesses.
inline constexpr int kWitnessLattice = 17;

PositivityCertificate certify_positive(const BiPoly& f, const Box& box, const CertifyOptions& options);

struct ValidationResult {
    bool valid = true;              // every recorded claim re-derived
    bool proves_nonnegative = false; // valid and no failed leaf
    std::vector<std::string> errors;
};

/// Independent re-check: recomputes every node's Bernstein coefficients by
/// fresh conversion (not by subdivision), checks the quadrisection
/// structure and re-derives each leaf verdict and corner margin.
ValidationResult validate_certificate(const PositivityCertificate& cert);

/// JSON document: the root node's fields at top level plus `polynomial`,
/// `max_depth`, `declared_corner` and `summary`. Rationals are "num/den".
nlohmann::json certificate_to_json(const PositivityCertificate& cert);
PositivityCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace hankel::bernstein
