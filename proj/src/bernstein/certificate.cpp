#include "hankel/bernstein/certificate.hpp"

#include <future>
#include <stdexcept>

namespace hankel::bernstein {

std::string to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::coeff_positive: return "coeff_positive";
        case NodeStatus::subdivided: return "subdivided";
        case NodeStatus::corner_certified: return "corner_certified";
        case NodeStatus::failed: return "failed";
    }
    return "failed";
}

NodeStatus node_status_from_string(const std::string& s) {
    if (s == "coeff_positive") return NodeStatus::coeff_positive;
    if (s == "subdivided") return NodeStatus::subdivided;
    if (s == "corner_certified") return NodeStatus::corner_certified;
    if (s == "failed") return NodeStatus::failed;
    throw std::invalid_argument("unknown node status '" + s + "'");
}

bool PositivityCertificate::succeeded() const { return count(NodeStatus::failed) == 0; }

std::vector<const CertNode*> PositivityCertificate::leaves() const {
    std::vector<const CertNode*> out;
    std::vector<const CertNode*> stack{&root};
    while (!stack.empty()) {
        const CertNode* n = stack.back();
        stack.pop_back();
        if (n->is_leaf()) {
            out.push_back(n);
        } else {
            for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(&*it);
        }
    }
    return out;
}

std::size_t PositivityCertificate::count(NodeStatus s) const {
    std::size_t c = 0;
    for (const CertNode* n : leaves()) c += n->status == s ? 1 : 0;
    return c;
}

namespace {

Witness lattice_minimum(const BiPoly& f, const Box& box) {
    const Rational steps(kWitnessLattice - 1);
    std::optional<Witness> best;
    for (int i = 0; i < kWitnessLattice; ++i) {
        const Rational p = box.p_lo + box.p_width() * Rational(i) / steps;
        for (int j = 0; j < kWitnessLattice; ++j) {
            const Rational x = box.x_lo + box.x_width() * Rational(j) / steps;
            Rational v = f.evaluate(p, x);
            if (!best || v < best->value) best = Witness{p, x, std::move(v)};
        }
    }
    return *best;
}

struct Builder {
    const BiPoly& f;
    const CertifyOptions& options;

    CertNode build(const BernsteinPatch& patch, int depth) const {
        CertNode node{patch.box, depth};
        const Enclosure e = enclosure(patch);
        node.min_bcoeff = e.min;
        node.max_bcoeff = e.max;

        if (e.min > Rational(0)) {
            node.status = NodeStatus::coeff_positive;
            return node;
        }
        if (options.corner && patch.box.has_vertex(options.corner->p, options.corner->x)) {
            const CornerSplit split = make_corner_split(f, patch.box, *options.corner);
            const CornerEstimate est = corner_estimate(split);
            if (est.success) {
                node.status = NodeStatus::corner_certified;
                node.corner = CornerData{*options.corner, split.half_width, est.lambda, est.tail_sum, est.margin};
                return node;
            }
        }
        if (depth < options.max_depth) {
            node.status = NodeStatus::subdivided;
            const auto kids = subdivide(patch);
            node.children.reserve(4);
            if (options.parallel && depth < 2) {
                std::vector<std::future<CertNode>> futures;
                for (const auto& kid : kids) {
                    futures.push_back(std::async(std::launch::async, [this, &kid, depth] { return build(kid, depth + 1); }));
                }
                for (auto& fut : futures) node.children.push_back(fut.get());
            } else {
                for (const auto& kid : kids) node.children.push_back(build(kid, depth + 1));
            }
            return node;
        }
        node.status = NodeStatus::failed;
        node.witness = lattice_minimum(f, patch.box);
        return node;
    }
};

void validate_node(const BiPoly& f, const CertNode& node, int depth, const PositivityCertificate& cert,
                   ValidationResult& out) {
    auto fail = [&](const std::string& what) {
        out.valid = false;
        out.errors.push_back(node.box.to_string() + ": " + what);
    };
    if (node.depth != depth) fail("recorded depth " + std::to_string(node.depth) + ", expected " + std::to_string(depth));

    const Enclosure e = enclosure(to_bernstein(f, node.box));
    if (e.min != node.min_bcoeff) fail("min_bcoeff " + node.min_bcoeff.to_string() + " != " + e.min.to_string());
    if (e.max != node.max_bcoeff) fail("max_bcoeff " + node.max_bcoeff.to_string() + " != " + e.max.to_string());

    switch (node.status) {
        case NodeStatus::coeff_positive:
            if (!node.is_leaf()) fail("positive leaf has children");
            if (!(e.min > Rational(0))) fail("coefficients not all positive");
            break;
        case NodeStatus::corner_certified: {
            if (!node.is_leaf()) fail("corner leaf has children");
            if (!node.corner) {
                fail("corner leaf without corner data");
                break;
            }
            if (!cert.declared_corner || !(*cert.declared_corner == node.corner->corner)) {
                fail("corner is not the declared zero");
                break;
            }
            if (!node.box.has_vertex(node.corner->corner.p, node.corner->corner.x)) {
                fail("corner is not a vertex of the box");
                break;
            }
            const CornerSplit split = make_corner_split(f, node.box, node.corner->corner);
            const CornerEstimate est = corner_estimate(split);
            if (!est.success) fail("corner estimate does not certify: " + est.reason);
            if (est.margin != node.corner->margin || est.lambda != node.corner->lambda ||
                est.tail_sum != node.corner->tail_sum || split.half_width != node.corner->half_width) {
                fail("recorded corner data differs from recomputation");
            }
            break;
        }
        case NodeStatus::subdivided: {
            if (node.children.size() != 4) {
                fail("subdivided node needs 4 children");
                break;
            }
            if (depth >= cert.max_depth) fail("subdivided beyond max_depth");
            const auto quads = node.box.quadrants();
            for (std::size_t k = 0; k < 4; ++k) {
                if (!(node.children[k].box == quads[k])) fail("child " + std::to_string(k) + " is not the expected quadrant");
                validate_node(f, node.children[k], depth + 1, cert, out);
            }
            break;
        }
        case NodeStatus::failed:
            if (!node.is_leaf()) fail("failed leaf has children");
            if (node.witness && node.witness->value != f.evaluate(node.witness->p, node.witness->x)) {
                fail("witness value does not match F");
            }
            break;
    }
}

}  // namespace

PositivityCertificate certify_positive(const BiPoly& f, const Box& box, const CertifyOptions& options) {
    if (options.max_depth < 0) {
        throw std::invalid_argument("certify_positive: max_depth must be nonnegative");
    }
    PositivityCertificate cert{f, CertNode{box}, options.max_depth, options.corner};
    Builder builder{f, options};
    cert.root = builder.build(to_bernstein(f, box), 0);
    return cert;
}

ValidationResult validate_certificate(const PositivityCertificate& cert) {
    ValidationResult out;
    validate_node(cert.poly, cert.root, 0, cert, out);
    out.proves_nonnegative = out.valid && cert.succeeded();
    return out;
}

}  // namespace hankel::bernstein
