// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsim/state.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/error.hpp"

namespace qsim {

namespace {

// Applies a 2x2 matrix to the register bit `bit` of a flat array.
void butterfly1(Complex *d, std::size_t size, int bit, Complex u00, Complex u01,
                Complex u10, Complex u11) {
  const std::size_t half = std::size_t(1) << bit;
  for (std::size_t hi = 0; hi < size; hi += 2 * half) {
    for (std::size_t lo = 0; lo < half; ++lo) {
      const std::size_t i0 = hi + lo;
      const std::size_t i1 = i0 + half;
      const Complex a = d[i0];
      const Complex b = d[i1];
      d[i0] = u00 * a + u01 * b;
      d[i1] = u10 * a + u11 * b;
    }
  }
}

void phase_bit(Complex *d, std::size_t size, int bit, Complex phase) {
  const std::size_t half = std::size_t(1) << bit;
  for (std::size_t hi = 0; hi < size; hi += 2 * half)
    for (std::size_t lo = 0; lo < half; ++lo)
      d[hi + lo + half] *= phase;
}

void swap_controlled(Complex *d, std::size_t size, std::size_t control_mask,
                     std::size_t target_mask) {
  for (std::size_t i = 0; i < size; ++i)
    if ((i & control_mask) == control_mask && !(i & target_mask))
      std::swap(d[i], d[i | target_mask]);
}

// Inserts zero bits at the (ascending) positions to enumerate base indices.
std::size_t expand_index(std::size_t t, const std::vector<int> &sorted_bits) {
  std::size_t r = t;
  for (int p : sorted_bits) {
    const std::size_t low = r & ((std::size_t(1) << p) - 1);
    r = ((r >> p) << (p + 1)) | low;
  }
  return r;
}

// Applies a 2^k x 2^k matrix to bit positions `bits` of a flat array of
// 2^total_bits entries. Bit j of the matrix index maps to bits[j].
void apply_matrix_flat(Complex *d, int total_bits, const Matrix &u,
                       const std::vector<int> &bits) {
  const int k = int(bits.size());
  if (k == 1) {
    butterfly1(d, std::size_t(1) << total_bits, bits[0], u(0, 0), u(0, 1),
               u(1, 0), u(1, 1));
    return;
  }
  std::vector<int> sorted = bits;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t block = std::size_t(1) << k;
  std::vector<std::size_t> offset(block);
  for (std::size_t j = 0; j < block; ++j) {
    std::size_t off = 0;
    for (int b = 0; b < k; ++b)
      if (j & (std::size_t(1) << b))
        off |= std::size_t(1) << bits[b];
    offset[j] = off;
  }
  std::vector<Complex> in(block), out(block);
  const std::size_t n_base = std::size_t(1) << (total_bits - k);
  for (std::size_t t = 0; t < n_base; ++t) {
    const std::size_t base = expand_index(t, sorted);
    for (std::size_t j = 0; j < block; ++j)
      in[j] = d[base | offset[j]];
    for (std::size_t r = 0; r < block; ++r) {
      Complex acc(0.0, 0.0);
      for (std::size_t c = 0; c < block; ++c)
        acc += u(Eigen::Index(r), Eigen::Index(c)) * in[c];
      out[r] = acc;
    }
    for (std::size_t j = 0; j < block; ++j)
      d[base | offset[j]] = out[j];
  }
}

} // namespace

QuantumState::QuantumState(int n_qubits, Backend backend)
    : n_(n_qubits), backend_(backend) {
  const int cap = backend == Backend::vector ? kMaxVectorQubits : kMaxDensityQubits;
  if (n_qubits < 1 || n_qubits > cap)
    throw CapacityError("register size " + std::to_string(n_qubits) +
                        " outside supported range [1, " + std::to_string(cap) +
                        "] for this backend");
  const std::size_t d = dim();
  data_.assign(backend == Backend::vector ? d : d * d, Complex(0.0, 0.0));
  data_[0] = Complex(1.0, 0.0);
}

QuantumState init_state(int n_qubits, Backend backend) {
  return QuantumState(n_qubits, backend);
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes) {
  int n = 0;
  while ((std::size_t(1) << n) < amplitudes.size())
    ++n;
  if (amplitudes.size() != (std::size_t(1) << n) || n < 1)
    throw ValidationError("amplitude count must be a power of two >= 2");
  double norm2 = 0.0;
  for (const Complex &a : amplitudes)
    norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw ValidationError("state vector is not normalized");
  QuantumState s(n, Backend::vector);
  s.data_ = std::move(amplitudes);
  return s;
}

Complex QuantumState::amplitude(std::size_t index) const {
  if (backend_ != Backend::vector)
    throw ValidationError("amplitude() requires the vector backend");
  return data_.at(index);
}

Complex QuantumState::density_element(std::size_t row, std::size_t col) const {
  if (backend_ != Backend::density)
    throw ValidationError("density_element() requires the density backend");
  return data_.at(row * dim() + col);
}

std::vector<Complex> QuantumState::statevector() const {
  if (backend_ != Backend::vector)
    throw ValidationError("statevector() requires the vector backend");
  return data_;
}

Matrix QuantumState::density_matrix() const {
  const std::size_t d = dim();
  Matrix rho(d, d);
  if (backend_ == Backend::density) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        rho(r, c) = data_[r * d + c];
  } else {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        rho(r, c) = data_[r] * std::conj(data_[c]);
  }
  return rho;
}

std::vector<double> QuantumState::probabilities() const {
  const std::size_t d = dim();
  std::vector<double> p(d);
  if (backend_ == Backend::vector) {
    for (std::size_t i = 0; i < d; ++i)
      p[i] = std::norm(data_[i]);
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      double v = data_[i * d + i].real();
      p[i] = v < 0.0 ? 0.0 : v; // clamp the PSD tolerance band
    }
  }
  return p;
}

double QuantumState::vector_norm() const {
  double n2 = 0.0;
  for (const Complex &a : data_)
    n2 += std::norm(a);
  return std::sqrt(n2);
}

double QuantumState::trace() const {
  if (backend_ != Backend::density)
    throw ValidationError("trace() requires the density backend");
  const std::size_t d = dim();
  double t = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    t += data_[i * d + i].real();
  return t;
}

void QuantumState::check_qubits(const std::vector<int> &qubits,
                                bool distinct) const {
  for (int q : qubits)
    if (q < 0 || q >= n_)
      throw ValidationError("qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(n_) +
                            " qubits");
  if (distinct) {
    std::vector<int> s = qubits;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("repeated qubit index");
  }
}

void QuantumState::apply_matrix_bits(const Matrix &u,
                                     const std::vector<int> &bits) {
  apply_matrix_flat(data_.data(),
                    backend_ == Backend::vector ? n_ : 2 * n_, u, bits);
}

void QuantumState::apply_unitary(const Matrix &u,
                                 const std::vector<int> &qubits) {
  check_qubits(qubits);
  const std::size_t k = qubits.size();
  if (k == 0 || k > std::size_t(n_))
    throw ValidationError("unitary must act on 1..n qubits");
  if (u.rows() != Eigen::Index(1) << k || u.cols() != u.rows())
    throw ValidationError("matrix dimension does not match qubit count");
  if (!is_unitary(u))
    throw ValidationError("matrix is not unitary within 1e-10");
  if (backend_ == Backend::vector) {
    apply_matrix_bits(u, qubits);
  } else {
    std::vector<int> row_bits(qubits);
    for (int &b : row_bits)
      b += n_;
    apply_matrix_bits(u, row_bits);
    apply_matrix_bits(u.conjugate(), qubits);
  }
}

void QuantumState::apply_gate1(const Matrix &u, int qubit) {
  if (backend_ == Backend::vector) {
    butterfly1(data_.data(), data_.size(), qubit, u(0, 0), u(0, 1), u(1, 0),
               u(1, 1));
  } else {
    butterfly1(data_.data(), data_.size(), qubit + n_, u(0, 0), u(0, 1),
               u(1, 0), u(1, 1));
    butterfly1(data_.data(), data_.size(), qubit, std::conj(u(0, 0)),
               std::conj(u(0, 1)), std::conj(u(1, 0)), std::conj(u(1, 1)));
  }
}

void QuantumState::apply_phase1(Complex phase, int qubit) {
  if (backend_ == Backend::vector) {
    phase_bit(data_.data(), data_.size(), qubit, phase);
  } else {
    phase_bit(data_.data(), data_.size(), qubit + n_, phase);
    phase_bit(data_.data(), data_.size(), qubit, std::conj(phase));
  }
}

void QuantumState::apply_cx(int control, int target) {
  apply_mct({control}, target);
}

void QuantumState::apply_mct(const std::vector<int> &controls, int target) {
  std::size_t cmask = 0;
  for (int c : controls)
    cmask |= std::size_t(1) << c;
  const std::size_t tmask = std::size_t(1) << target;
  if (backend_ == Backend::vector) {
    swap_controlled(data_.data(), data_.size(), cmask, tmask);
  } else {
    swap_controlled(data_.data(), data_.size(), cmask << n_, tmask << n_);
    swap_controlled(data_.data(), data_.size(), cmask, tmask);
  }
}

void QuantumState::apply_kraus(const KrausChannel &channel,
                               const std::vector<int> &qubits,
                               RandomStream *rng) {
  check_qubits(qubits);
  if (int(qubits.size()) != channel.arity)
    throw ValidationError("channel arity does not match qubit count");
  channel.validate();
  if (backend_ == Backend::density) {
    apply_channel_density(channel, qubits);
  } else {
    if (rng == nullptr)
      throw ValidationError("vector backend needs a RandomStream to sample "
                            "Kraus branches");
    apply_channel_vector(channel, qubits, *rng);
  }
}

void QuantumState::apply_channel_vector(const KrausChannel &channel,
                                        const std::vector<int> &qubits,
                                        RandomStream &rng) {
  const double u = rng.next_double();
  double cum = 0.0;
  std::vector<Complex> branch;
  std::vector<Complex> last_good;
  double last_w = 0.0;
  for (const Matrix &e : channel.ops) {
    branch = data_;
    apply_matrix_flat(branch.data(), n_, e, qubits);
    double w = 0.0;
    for (const Complex &a : branch)
      w += std::norm(a);
    if (w > 0.0) {
      last_good = branch;
      last_w = w;
    }
    cum += w;
    if (cum > u) {
      const double inv = 1.0 / std::sqrt(w);
      for (Complex &a : branch)
        a *= inv;
      data_ = std::move(branch);
      return;
    }
  }
  // Completeness puts cum within fp noise of 1; fall back to the last branch
  // that had weight.
  if (last_w == 0.0)
    throw ValidationError("all Kraus branches annihilate the state");
  const double inv = 1.0 / std::sqrt(last_w);
  for (Complex &a : last_good)
    a *= inv;
  data_ = std::move(last_good);
}

void QuantumState::apply_channel_density(const KrausChannel &channel,
                                         const std::vector<int> &qubits) {
  if (channel.arity != 1) {
    apply_channel_density_generic(channel, qubits);
    return;
  }
  const std::size_t d = dim();
  const std::size_t rmask = std::size_t(1) << (qubits[0] + n_);
  const std::size_t cmask = std::size_t(1) << qubits[0];
  Complex *dat = data_.data();
  const std::size_t size = d * d;

  // Visit each (row bit, col bit) 2x2 cell of the target qubit once.
  auto for_each_cell = [&](auto &&update) {
    for (std::size_t i = 0; i < size; ++i) {
      if (i & (rmask | cmask))
        continue;
      update(dat[i], dat[i | cmask], dat[i | rmask], dat[i | rmask | cmask]);
    }
  };

  switch (channel.family) {
  case ChannelFamily::bit_flip: {
    const double p = channel.params.at(0), q = 1.0 - p;
    for_each_cell([&](Complex &m00, Complex &m01, Complex &m10, Complex &m11) {
      const Complex a = m00, b = m01, c = m10, e = m11;
      m00 = q * a + p * e;
      m11 = q * e + p * a;
      m01 = q * b + p * c;
      m10 = q * c + p * b;
    });
    return;
  }
  case ChannelFamily::phase_flip: {
    const double f = 1.0 - 2.0 * channel.params.at(0);
    for_each_cell([&](Complex &, Complex &m01, Complex &m10, Complex &) {
      m01 *= f;
      m10 *= f;
    });
    return;
  }
  case ChannelFamily::bitphase_flip: {
    const double p = channel.params.at(0), q = 1.0 - p;
    for_each_cell([&](Complex &m00, Complex &m01, Complex &m10, Complex &m11) {
      const Complex a = m00, b = m01, c = m10, e = m11;
      m00 = q * a + p * e;
      m11 = q * e + p * a;
      m01 = q * b - p * c;
      m10 = q * c - p * b;
    });
    return;
  }
  case ChannelFamily::depolarizing: {
    const double p = channel.params.at(0), q = 1.0 - p;
    for_each_cell([&](Complex &m00, Complex &m01, Complex &m10, Complex &m11) {
      const Complex mix = 0.5 * p * (m00 + m11);
      m00 = q * m00 + mix;
      m11 = q * m11 + mix;
      m01 *= q;
      m10 *= q;
    });
    return;
  }
  case ChannelFamily::amplitude_damping: {
    const double g = channel.params.at(0);
    const double s = std::sqrt(1.0 - g);
    for_each_cell([&](Complex &m00, Complex &m01, Complex &m10, Complex &m11) {
      m00 += g * m11;
      m11 *= 1.0 - g;
      m01 *= s;
      m10 *= s;
    });
    return;
  }
  case ChannelFamily::phase_damping: {
    const double s = std::sqrt(1.0 - channel.params.at(0));
    for_each_cell([&](Complex &, Complex &m01, Complex &m10, Complex &) {
      m01 *= s;
      m10 *= s;
    });
    return;
  }
  case ChannelFamily::thermal_relaxation: {
    const double g = channel.params.at(0);
    const double off = std::sqrt(1.0 - g) * (1.0 - 2.0 * channel.params.at(1));
    for_each_cell([&](Complex &m00, Complex &m01, Complex &m10, Complex &m11) {
      m00 += g * m11;
      m11 *= 1.0 - g;
      m01 *= off;
      m10 *= off;
    });
    return;
  }
  case ChannelFamily::reset: {
    for_each_cell([&](Complex &m00, Complex &m01, Complex &m10, Complex &m11) {
      m00 += m11;
      m01 = Complex(0.0, 0.0);
      m10 = Complex(0.0, 0.0);
      m11 = Complex(0.0, 0.0);
    });
    return;
  }
  case ChannelFamily::custom:
    break;
  }
  apply_channel_density_generic(channel, qubits);
}

void QuantumState::apply_channel_density_generic(
    const KrausChannel &channel, const std::vector<int> &qubits) {
  std::vector<int> row_bits(qubits);
  for (int &b : row_bits)
    b += n_;
  std::vector<Complex> acc(data_.size(), Complex(0.0, 0.0));
  std::vector<Complex> term;
  for (const Matrix &e : channel.ops) {
    term = data_;
    apply_matrix_flat(term.data(), 2 * n_, e, row_bits);
    apply_matrix_flat(term.data(), 2 * n_, e.conjugate(), qubits);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += term[i];
  }
  data_ = std::move(acc);
}

MeasurementRecord QuantumState::measure(const std::vector<int> &qubits,
                                        RandomStream &rng) {
  check_qubits(qubits);
  const int k = int(qubits.size());
  if (k == 0)
    throw ValidationError("measurement needs at least one qubit");
  const std::size_t n_out = std::size_t(1) << k;
  const std::size_t d = dim();

  auto extract = [&](std::size_t idx) {
    std::size_t out = 0;
    for (int j = 0; j < k; ++j)
      if (idx & (std::size_t(1) << qubits[j]))
        out |= std::size_t(1) << j;
    return out;
  };

  std::vector<double> pr(n_out, 0.0);
  if (backend_ == Backend::vector) {
    for (std::size_t i = 0; i < d; ++i)
      pr[extract(i)] += std::norm(data_[i]);
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      const double v = data_[i * d + i].real();
      pr[extract(i)] += v < 0.0 ? 0.0 : v;
    }
  }

  const double u = rng.next_double();
  std::size_t outcome = n_out - 1;
  double cum = 0.0;
  for (std::size_t o = 0; o < n_out; ++o) {
    cum += pr[o];
    if (cum > u) {
      outcome = o;
      break;
    }
  }
  while (pr[outcome] <= 0.0 && outcome > 0)
    --outcome;
  const double p = pr[outcome];

  if (backend_ == Backend::vector) {
    const double inv = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < d; ++i)
      data_[i] = extract(i) == outcome ? data_[i] * inv : Complex(0.0, 0.0);
  } else {
    const double inv = 1.0 / p;
    for (std::size_t r = 0; r < d; ++r) {
      const bool rok = extract(r) == outcome;
      for (std::size_t c = 0; c < d; ++c)
        data_[r * d + c] = (rok && extract(c) == outcome)
                               ? data_[r * d + c] * inv
                               : Complex(0.0, 0.0);
    }
  }

  MeasurementRecord rec;
  rec.qubits = qubits;
  rec.bits.resize(k);
  for (int j = 0; j < k; ++j)
    rec.bits[j] = int((outcome >> j) & 1u);
  rec.probability = p;
  return rec;
}

void QuantumState::reset(const std::vector<int> &qubits, RandomStream &rng) {
  check_qubits(qubits);
  if (backend_ == Backend::density) {
    KrausChannel reset_channel;
    reset_channel.arity = 1;
    reset_channel.family = ChannelFamily::reset;
    for (int q : qubits)
      apply_channel_density(reset_channel, {q});
    return;
  }
  const std::size_t d = dim();
  for (int q : qubits) {
    const std::size_t mask = std::size_t(1) << q;
    double p1 = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      if (i & mask)
        p1 += std::norm(data_[i]);
    const double u = rng.next_double();
    const bool one = (1.0 - p1) <= u && p1 > 0.0;
    const double inv = 1.0 / std::sqrt(one ? p1 : 1.0 - p1);
    for (std::size_t i = 0; i < d; ++i) {
      if (i & mask)
        continue;
      // keep the sampled branch on the |0> side, flipping when outcome was 1
      data_[i] = (one ? data_[i | mask] : data_[i]) * inv;
      data_[i | mask] = Complex(0.0, 0.0);
    }
  }
}

void QuantumState::decohere(const std::vector<int> &qubits) {
  if (backend_ != Backend::density)
    throw ValidationError("decohere() requires the density backend");
  check_qubits(qubits);
  std::size_t qmask = 0;
  for (int q : qubits)
    qmask |= std::size_t(1) << q;
  const std::size_t d = dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if ((r ^ c) & qmask)
        data_[r * d + c] = Complex(0.0, 0.0);
}

} // namespace qsim
