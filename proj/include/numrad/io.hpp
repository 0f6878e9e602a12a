// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// JSON interchange. Complex numbers are [re, im] pairs; matrices are nested
// row-major arrays; keys are emitted in a stable order. Doubles round-trip
// bit-for-bit (shortest-representation serialization on both ends).
// Parse failures name the offending field.

#ifndef NUMRAD_IO_HPP
#define NUMRAD_IO_HPP

#include "numrad/bounds.hpp"
#include "numrad/radius.hpp"

#include <json.hpp>

namespace numrad {

using ordered_json = nlohmann::ordered_json;

namespace io_detail {

inline ordered_json complex_to_json(const cplx& z) {
  return ordered_json::array({z.real(), z.imag()});
}

inline ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename J>
cplx parse_complex(const J& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(field, "expected [re, im] number pair");
  }
  const double re = j[0].template get<double>();
  const double im = j[1].template get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError(field, "non-finite entry");
  }
  return {re, im};
}

template <typename J>
Matrix parse_matrix(const J& j, Eigen::Index rows, Eigen::Index cols, const std::string& field) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    throw ParseError(field, "expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    const std::string rfield = field + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(rfield, "expected " + std::to_string(cols) + " columns");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                              rfield + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

template <typename J>
AlgebraSignature parse_signature(const J& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ParseError(field, "expected nonempty array of block dimensions");
  std::vector<int> dims;
  dims.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& d = j[i];
    if (!d.is_number_integer() || d.template get<long>() < 1) {
      throw ParseError(field + "[" + std::to_string(i) + "]", "expected positive integer");
    }
    dims.push_back(d.template get<int>());
  }
  return AlgebraSignature(std::move(dims));
}

template <typename J>
int parse_k(const J& j) {
  if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].template get<long>() < 1) {
    throw ParseError("k", "expected positive integer");
  }
  return j["k"].template get<int>();
}

template <typename J>
const J& require_field(const J& j, const char* name) {
  if (!j.is_object()) throw ParseError(name, "expected enclosing object");
  if (!j.contains(name)) throw ParseError(name, "missing field");
  return j.at(name);
}

}  // namespace io_detail

inline ordered_json to_json(const AlgebraElement& a) {
  ordered_json j;
  j["sig"] = a.sig.block_dims;
  ordered_json blocks = ordered_json::array();
  for (const auto& m : a.blocks) blocks.push_back(io_detail::matrix_to_json(m));
  j["blocks"] = std::move(blocks);
  return j;
}

inline ordered_json to_json(const State& rho) {
  ordered_json j;
  j["sig"] = rho.sig.block_dims;
  ordered_json densities = ordered_json::array();
  for (const auto& m : rho.densities) densities.push_back(io_detail::matrix_to_json(m));
  j["densities"] = std::move(densities);
  return j;
}

inline ordered_json to_json(const Frame& x) {
  ordered_json j;
  j["sig"] = x.sig.block_dims;
  j["k"] = x.k;
  ordered_json blocks = ordered_json::array();
  for (const auto& m : x.blocks) blocks.push_back(io_detail::matrix_to_json(m));
  j["blocks"] = std::move(blocks);
  return j;
}

inline ordered_json to_json(const ModuleOperator& t) {
  ordered_json j;
  j["sig"] = t.sig.block_dims;
  j["k"] = t.k;
  ordered_json blocks = ordered_json::array();
  for (const auto& m : t.blocks) blocks.push_back(io_detail::matrix_to_json(m));
  j["blocks"] = std::move(blocks);
  return j;
}

template <typename J>
AlgebraElement parse_element(const J& j) {
  const AlgebraSignature sig = io_detail::parse_signature(io_detail::require_field(j, "sig"), "sig");
  const auto& jb = io_detail::require_field(j, "blocks");
  if (!jb.is_array() || static_cast<int>(jb.size()) != sig.num_blocks()) {
    throw ParseError("blocks", "expected one block per signature entry");
  }
  std::vector<Matrix> blocks;
  for (int b = 0; b < sig.num_blocks(); ++b) {
    blocks.push_back(io_detail::parse_matrix(jb[static_cast<std::size_t>(b)], sig.dim(b),
                                             sig.dim(b), "blocks[" + std::to_string(b) + "]"));
  }
  return {sig, std::move(blocks)};
}

template <typename J>
State parse_state(const J& j) {
  const AlgebraSignature sig = io_detail::parse_signature(io_detail::require_field(j, "sig"), "sig");
  const auto& jd = io_detail::require_field(j, "densities");
  if (!jd.is_array() || static_cast<int>(jd.size()) != sig.num_blocks()) {
    throw ParseError("densities", "expected one density per signature entry");
  }
  std::vector<Matrix> densities;
  for (int b = 0; b < sig.num_blocks(); ++b) {
    densities.push_back(io_detail::parse_matrix(jd[static_cast<std::size_t>(b)], sig.dim(b),
                                                sig.dim(b), "densities[" + std::to_string(b) + "]"));
  }
  return {sig, std::move(densities)};
}

template <typename J>
Frame parse_frame(const J& j) {
  const AlgebraSignature sig = io_detail::parse_signature(io_detail::require_field(j, "sig"), "sig");
  const int k = io_detail::parse_k(j);
  const auto& jb = io_detail::require_field(j, "blocks");
  if (!jb.is_array() || static_cast<int>(jb.size()) != sig.num_blocks()) {
    throw ParseError("blocks", "expected one block per signature entry");
  }
  std::vector<Matrix> blocks;
  for (int b = 0; b < sig.num_blocks(); ++b) {
    blocks.push_back(io_detail::parse_matrix(jb[static_cast<std::size_t>(b)],
                                             static_cast<Eigen::Index>(k) * sig.dim(b), sig.dim(b),
                                             "blocks[" + std::to_string(b) + "]"));
  }
  return {sig, k, std::move(blocks)};
}

template <typename J>
ModuleOperator parse_operator(const J& j) {
  const AlgebraSignature sig = io_detail::parse_signature(io_detail::require_field(j, "sig"), "sig");
  const int k = io_detail::parse_k(j);
  const auto& jb = io_detail::require_field(j, "blocks");
  if (!jb.is_array() || static_cast<int>(jb.size()) != sig.num_blocks()) {
    throw ParseError("blocks", "expected one block per signature entry");
  }
  std::vector<Matrix> blocks;
  for (int b = 0; b < sig.num_blocks(); ++b) {
    const Eigen::Index d = static_cast<Eigen::Index>(k) * sig.dim(b);
    blocks.push_back(
        io_detail::parse_matrix(jb[static_cast<std::size_t>(b)], d, d,
                                "blocks[" + std::to_string(b) + "]"));
  }
  return {sig, k, std::move(blocks)};
}

inline ordered_json to_json(const RadiusResult& r) {
  ordered_json j;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["exactness"] = to_string(r.exactness);
  j["tol"] = r.tol;
  if (r.witness) {
    if (std::holds_alternative<double>(*r.witness)) {
      j["witness"] = ordered_json{{"type", "theta"}, {"theta", std::get<double>(*r.witness)}};
    } else if (std::holds_alternative<Frame>(*r.witness)) {
      j["witness"] = ordered_json{{"type", "frame"}, {"frame", to_json(std::get<Frame>(*r.witness))}};
    } else {
      const auto& sf = std::get<StateFrameWitness>(*r.witness);
      j["witness"] = ordered_json{{"type", "state-frame"},
                                  {"state", to_json(sf.state)},
                                  {"frame", to_json(sf.frame)}};
    }
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["holds"] = r.holds;
  j["tol"] = r.tol;
  ordered_json comps;
  for (const auto& [name, value] : r.components) comps[name] = value;
  j["components"] = std::move(comps);
  return j;
}

}  // namespace numrad

#endif  // NUMRAD_IO_HPP
