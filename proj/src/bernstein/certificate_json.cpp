#include <stdexcept>

#include "hankel/bernstein/certificate.hpp"

namespace hankel::bernstein {

using nlohmann::json;

namespace {

std::string q(const Rational& r) { return r.to_fraction_string(); }

Rational parse_q(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("certificate JSON: rationals must be \"num/den\" strings");
    return Rational::parse(j.get<std::string>());
}

json node_to_json(const CertNode& n) {
    json j;
    j["box"] = {q(n.box.p_lo), q(n.box.p_hi), q(n.box.x_lo), q(n.box.x_hi)};
    j["depth"] = n.depth;
    j["status"] = to_string(n.status);
    j["min_bcoeff"] = q(n.min_bcoeff);
    j["max_bcoeff"] = q(n.max_bcoeff);
    if (n.corner) {
        j["margin"] = q(n.corner->margin);
        j["corner"] = {{"p", q(n.corner->corner.p)},
                       {"x", q(n.corner->corner.x)},
                       {"half_width", q(n.corner->half_width)},
                       {"lambda", q(n.corner->lambda)},
                       {"tail_sum", q(n.corner->tail_sum)}};
    }
    if (n.witness) {
        j["witness"] = {{"p", q(n.witness->p)}, {"x", q(n.witness->x)}, {"value", q(n.witness->value)}};
    }
    json kids = json::array();
    for (const auto& c : n.children) kids.push_back(node_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

CertNode node_from_json(const json& j) {
    const auto& b = j.at("box");
    if (!b.is_array() || b.size() != 4) throw std::invalid_argument("certificate JSON: box needs 4 entries");
    CertNode n{Box(parse_q(b[0]), parse_q(b[1]), parse_q(b[2]), parse_q(b[3]))};
    n.depth = j.at("depth").get<int>();
    n.status = node_status_from_string(j.at("status").get<std::string>());
    n.min_bcoeff = parse_q(j.at("min_bcoeff"));
    n.max_bcoeff = parse_q(j.at("max_bcoeff"));
    if (j.contains("corner")) {
        const auto& c = j.at("corner");
        n.corner = CornerData{CornerPoint{parse_q(c.at("p")), parse_q(c.at("x"))}, parse_q(c.at("half_width")),
                              parse_q(c.at("lambda")), parse_q(c.at("tail_sum")), parse_q(j.at("margin"))};
    }
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        n.witness = Witness{parse_q(w.at("p")), parse_q(w.at("x")), parse_q(w.at("value"))};
    }
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    return n;
}

}  // namespace

json certificate_to_json(const PositivityCertificate& cert) {
    json doc = node_to_json(cert.root);
    json monomials = json::array();
    const BiPoly& f = cert.poly;
    for (std::size_t i = 0; i <= f.deg_p(); ++i) {
        for (std::size_t j = 0; j <= f.deg_x(); ++j) {
            const Rational c = f.coeff(i, j);
            if (!c.is_zero()) monomials.push_back({i, j, q(c)});
        }
    }
    doc["polynomial"] = {{"bidegree", {f.deg_p(), f.deg_x()}}, {"monomials", std::move(monomials)}};
    doc["max_depth"] = cert.max_depth;
    doc["declared_corner"] =
        cert.declared_corner ? json{q(cert.declared_corner->p), q(cert.declared_corner->x)} : json(nullptr);
    doc["summary"] = {{"succeeded", cert.succeeded()},
                      {"leaves", cert.leaves().size()},
                      {"coeff_positive", cert.count(NodeStatus::coeff_positive)},
                      {"corner_certified", cert.count(NodeStatus::corner_certified)},
                      {"failed", cert.count(NodeStatus::failed)}};
    return doc;
}

PositivityCertificate certificate_from_json(const json& doc) {
    const auto& poly = doc.at("polynomial");
    const auto& bideg = poly.at("bidegree");
    BiPoly f(bideg.at(0).get<std::size_t>(), bideg.at(1).get<std::size_t>());
    for (const auto& m : poly.at("monomials")) {
        f.add_to(m.at(0).get<std::size_t>(), m.at(1).get<std::size_t>(), parse_q(m.at(2)));
    }
    PositivityCertificate cert{std::move(f), node_from_json(doc), doc.at("max_depth").get<int>(), std::nullopt};
    const auto& corner = doc.at("declared_corner");
    if (!corner.is_null()) cert.declared_corner = CornerPoint{parse_q(corner.at(0)), parse_q(corner.at(1))};
    return cert;
}

}  // namespace hankel::bernstein
