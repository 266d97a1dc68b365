#include "projectivoid/matrix_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "projectivoid/literal.hpp"

namespace projectivoid {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct RawMatrix {
  Prime p;
  std::size_t m;
  std::vector<std::string> literals;
};

RawMatrix read_document(std::string_view text, std::optional<Prime> session) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed matrix document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("m") || !doc.contains("entries")) {
    throw Error(ErrorCode::SyntaxError, "matrix document needs keys p, m, entries");
  }
  if (!doc["p"].is_number_unsigned() || !doc["m"].is_number_unsigned() || !doc["entries"].is_array()) {
    throw Error(ErrorCode::SyntaxError, "p and m must be positive integers, entries an array");
  }
  Prime p(doc["p"].get<unsigned long>());
  if (session && !(*session == p)) {
    throw Error(ErrorCode::PrimeMismatch, "document prime " + std::to_string(p.value()) +
                                              " differs from --prime " +
                                              std::to_string(session->value()));
  }
  const auto m = doc["m"].get<std::size_t>();
  if (m == 0) throw Error(ErrorCode::SyntaxError, "rank must be positive");
  const auto& rows = doc["entries"];
  if (rows.size() != m) {
    throw Error(ErrorCode::RaggedMatrix, "expected " + std::to_string(m) + " rows");
  }
  RawMatrix raw{p, m, {}};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != m) {
      throw Error(ErrorCode::RaggedMatrix, "row " + std::to_string(i) + " does not have " +
                                               std::to_string(m) + " entries");
    }
    for (const auto& cell : row) {
      if (cell.is_string()) {
        raw.literals.push_back(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        raw.literals.push_back(std::to_string(cell.get<long long>()));
      } else {
        throw Error(ErrorCode::SyntaxError, "matrix entries must be series literals");
      }
    }
  }
  return raw;
}

}  // namespace

SMatrix parse_matrix(std::string_view json_text, std::optional<Prime> session) {
  RawMatrix raw = read_document(json_text, session);
  std::vector<PSeries> entries;
  entries.reserve(raw.literals.size());
  for (const auto& lit : raw.literals) entries.push_back(parse_series(lit, raw.p));
  return SMatrix(raw.p, raw.m, std::move(entries));
}

std::string to_json(const SMatrix& a) {
  ordered_json doc;
  doc["p"] = a.prime().value();
  doc["m"] = a.rank();
  doc["entries"] = ordered_json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.rank(); ++j) row.push_back(to_string(a(i, j)));
    doc["entries"].push_back(std::move(row));
  }
  return doc.dump();
}

LMatrix parse_laurent_matrix(std::string_view json_text, bool finite_field,
                             std::optional<Prime> session) {
  RawMatrix raw = read_document(json_text, session);
  const Field k = finite_field ? Field::finite(raw.p) : Field::rationals();
  std::vector<LaurentPoly> entries;
  entries.reserve(raw.literals.size());
  for (auto lit : raw.literals) {
    std::replace(lit.begin(), lit.end(), 's', 'v');
    PSeries f = parse_series(lit, raw.p);
    if (!f.is_exact()) throw Error(ErrorCode::SyntaxError, "classical entries must be exact");
    LaurentPoly::Terms terms;
    for (const auto& [e, c] : f.terms()) {
      if (!e.is_integer() || !e.num().fits_slong_p()) {
        throw Error(ErrorCode::SyntaxError, "classical entries need integer exponents: " + lit);
      }
      terms.emplace(e.num().get_si(), c);
    }
    entries.emplace_back(k, terms);
  }
  return LMatrix(k, raw.m, std::move(entries));
}

std::string to_json(const LMatrix& a, Prime p) {
  ordered_json doc;
  doc["p"] = p.value();
  doc["m"] = a.rank();
  doc["entries"] = ordered_json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.rank(); ++j) {
      PSeries::Terms terms;
      for (const auto& [n, c] : a(i, j).terms()) terms.emplace(PExp(n), c);
      row.push_back(to_string(PSeries(p, std::move(terms))));
    }
    doc["entries"].push_back(std::move(row));
  }
  return doc.dump();
}

}  // namespace projectivoid
