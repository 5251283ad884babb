// Copyright 2026 The cliffatlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cliffatlas/gate_matrix.hpp"

#include <stdexcept>

#include "cliffatlas/number_theory.hpp"

namespace cliffatlas {

namespace {

void require_same_dim(const GateMatrix& a, const GateMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

Cyclotomic cofactor_det(const std::vector<Cyclotomic>& m, int n) {
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  Cyclotomic total;
  for (int col = 0; col < n; ++col) {
    const Cyclotomic& pivot = m[static_cast<std::size_t>(col)];
    if (pivot.is_zero()) continue;
    std::vector<Cyclotomic> minor;
    minor.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int r = 1; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c != col) minor.push_back(m[static_cast<std::size_t>(r * n + c)]);
      }
    }
    Cyclotomic term = pivot * cofactor_det(minor, n - 1);
    total = (col % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace

GateMatrix::GateMatrix(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {
  if (dim < 0) throw std::invalid_argument("GateMatrix: negative dimension");
}

GateMatrix GateMatrix::identity(int dim) {
  GateMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

GateMatrix GateMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
  int n = static_cast<int>(rows.size());
  GateMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("GateMatrix: rows must form a square matrix");
    }
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

GateMatrix GateMatrix::diagonal(const std::vector<Cyclotomic>& diag) {
  GateMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = diag[i];
  return m;
}

GateMatrix GateMatrix::permutation(const std::vector<int>& perm) {
  GateMatrix m(static_cast<int>(perm.size()));
  for (int j = 0; j < m.dim(); ++j) m.at(perm[j], j) = Cyclotomic(1);
  return m;
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  require_same_dim(a, b, "mul");
  int n = a.dim_;
  GateMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Cyclotomic& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Cyclotomic& bkj = b(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

GateMatrix operator*(const Cyclotomic& s, const GateMatrix& m) {
  GateMatrix out = m;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

GateMatrix operator+(const GateMatrix& a, const GateMatrix& b) {
  require_same_dim(a, b, "add");
  GateMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

GateMatrix GateMatrix::operator-() const {
  GateMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out.at(j, i) = (*this)(i, j).conj();
  }
  return out;
}

GateMatrix GateMatrix::transpose() const {
  GateMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out.at(j, i) = (*this)(i, j);
  }
  return out;
}

GateMatrix GateMatrix::pow(long e) const {
  if (e < 0) return adjoint().pow(-e);
  GateMatrix result = identity(dim_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Cyclotomic GateMatrix::det() const {
  if (dim_ == 0) return Cyclotomic(1);
  return cofactor_det(entries_, dim_);
}

Cyclotomic GateMatrix::trace() const {
  Cyclotomic t;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::optional<Cyclotomic> GateMatrix::is_scalar() const {
  if (dim_ == 0) return std::nullopt;
  if (!is_diagonal()) return std::nullopt;
  for (int i = 1; i < dim_; ++i) {
    if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
  }
  return (*this)(0, 0);
}

bool GateMatrix::is_identity() const {
  auto s = is_scalar();
  return s && s->is_one();
}

bool GateMatrix::is_diagonal() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::string GateMatrix::key() const {
  std::string out = std::to_string(dim_);
  for (const auto& e : entries_) {
    out += '|';
    out += e.to_string();
  }
  return out;
}

std::size_t GateMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(dim_);
  for (const auto& e : entries_) h = h * 1000003u ^ e.hash();
  return h;
}

nlohmann::json GateMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < dim_; ++j) row.push_back((*this)(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", dim_}, {"entries", std::move(rows)}};
}

GateMatrix GateMatrix::from_json(const nlohmann::json& j) {
  int n = j.at("dim").get<int>();
  const auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("GateMatrix JSON: row count differs from dim");
  }
  GateMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw std::invalid_argument("GateMatrix JSON: column count differs from dim");
    }
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = Cyclotomic::parse(rows[r][c].get<std::string>());
    }
  }
  return m;
}

long GateMatrix::conductor() const {
  long n = 1;
  for (const auto& e : entries_) n = nt::lcm(n, e.conductor());
  return n;
}

GateMatrix kron(const GateMatrix& a, const GateMatrix& b) {
  int na = a.dim(), nb = b.dim();
  GateMatrix out(na * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      const Cyclotomic& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < nb; ++k) {
        for (int l = 0; l < nb; ++l) {
          const Cyclotomic& bkl = b(k, l);
          if (!bkl.is_zero()) out.at(i * nb + k, j * nb + l) = aij * bkl;
        }
      }
    }
  }
  return out;
}

std::optional<MonomialParts> monomial_parts(const GateMatrix& m) {
  int n = m.dim();
  MonomialParts parts{std::vector<int>(static_cast<std::size_t>(n), -1), GateMatrix(n)};
  std::vector<bool> row_used(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      if (parts.perm[j] != -1 || row_used[i]) return std::nullopt;
      parts.perm[j] = i;
      row_used[i] = true;
    }
    if (parts.perm[j] == -1) return std::nullopt;
    parts.diagonal.at(j, j) = m(parts.perm[j], j);
  }
  return parts;
}

bool tensor_factorizable(const GateMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("tensor_factorizable: need a 4x4 matrix");
  // Realignment: R[(i1,j1)][(i2,j2)] = m[2*i1+i2][2*j1+j2]; m is a tensor
  // product exactly when R has rank one.
  Cyclotomic r[4][4];
  bool nonzero = false;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 2; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          r[2 * i1 + j1][2 * i2 + j2] = m(2 * i1 + i2, 2 * j1 + j2);
          nonzero = nonzero || !m(2 * i1 + i2, 2 * j1 + j2).is_zero();
        }
      }
    }
  }
  if (!nonzero) return false;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = c + 1; d < 4; ++d) {
          if (!(r[a][c] * r[b][d] == r[a][d] * r[b][c])) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace cliffatlas
