#include "pvseq/json_io.hpp"

namespace pvseq {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw std::invalid_argument("scalar must be an integer or a 'p/q' string");
}

json rational_to_json(const Rational& r) { return r.str(); }

VectorSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("vectors"))
        throw std::invalid_argument("sequence: expected {\"n\", \"vectors\"}");
    const auto n = j.at("n").get<std::int64_t>();
    const json& vectors = j.at("vectors");
    if (n < 0 || !vectors.is_array() ||
        vectors.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("sequence: n does not match vectors length");
    std::vector<Vec2> inner;
    inner.reserve(vectors.size());
    for (const json& entry : vectors) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("sequence: each vector is a pair");
        inner.push_back(
            {rational_from_json(entry[0]), rational_from_json(entry[1])});
    }
    return VectorSequence(std::move(inner));
}

json sequence_to_json(const VectorSequence& v) {
    json vectors = json::array();
    for (const Vec2& w : v.inner())
        vectors.push_back({rational_to_json(w.a), rational_to_json(w.b)});
    return {{"n", v.n()}, {"vectors", vectors}};
}

SymMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected {\"order\", \"entries\"}");
    const auto order = j.at("order").get<std::int64_t>();
    const json& entries = j.at("entries");
    if (order < 0 || !entries.is_array() ||
        entries.size() != static_cast<std::size_t>(order))
        throw std::invalid_argument("matrix: order does not match entries");
    const std::size_t n = static_cast<std::size_t>(order);
    std::vector<std::vector<Rational>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!entries[i].is_array() || entries[i].size() != n)
            throw std::invalid_argument("matrix: ragged entries");
        for (const json& e : entries[i]) rows[i].push_back(rational_from_json(e));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (rows[i][k] != rows[k][i])
                throw std::invalid_argument("matrix: not symmetric");
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) a.set_sym(i, k, rows[i][k]);
    return a;
}

json matrix_to_json(const SymMatrix& a) {
    json entries = json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.order(); ++k)
            row.push_back(rational_to_json(a.at(i, k)));
        entries.push_back(std::move(row));
    }
    return {{"order", a.order()}, {"entries", entries}};
}

TriDiagSym tridiag_from_json(const json& j) {
    if (!j.is_object() || !j.contains("diag") || !j.contains("super"))
        throw std::invalid_argument("tridiag: expected {\"diag\", \"super\"}");
    std::vector<Rational> diag, super;
    for (const json& e : j.at("diag")) diag.push_back(rational_from_json(e));
    for (const json& e : j.at("super")) super.push_back(rational_from_json(e));
    const std::size_t expected = diag.empty() ? 0 : diag.size() - 1;
    if (super.size() != expected)
        throw std::invalid_argument("tridiag: super must have length order-1");
    return TriDiagSym(std::move(diag), std::move(super));
}

json tridiag_to_json(const TriDiagSym& b) {
    json diag = json::array(), super = json::array();
    for (const Rational& p : b.diag()) diag.push_back(rational_to_json(p));
    for (const Rational& q : b.super()) super.push_back(rational_to_json(q));
    return {{"diag", diag}, {"super", super}};
}

ComponentLabel label_from_json(const json& j, std::size_t& n_out) {
    if (!j.is_object() || !j.contains("n") || !j.contains("interior_signs") ||
        !j.contains("signature"))
        throw std::invalid_argument(
            "label: expected {\"n\", \"interior_signs\", \"signature\"}");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw std::invalid_argument("label: n must be >= 1");
    n_out = static_cast<std::size_t>(n);
    ComponentLabel label;
    for (const json& e : j.at("interior_signs"))
        label.interior_signs.push_back(e.get<int>());
    label.signature = j.at("signature").get<int>();
    return label;
}

json label_to_json(std::size_t n, const ComponentLabel& label) {
    return {{"n", n},
            {"interior_signs", label.interior_signs},
            {"signature", label.signature}};
}

}  // namespace pvseq
