#include "knotgrid/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace knotgrid {

namespace {

void check_shape(const BitArray& r, const char* who) {
  if (r.rows < 1 || r.cols < 1) {
    throw std::invalid_argument(std::string(who) + ": bit array must be at least 1x1");
  }
  if (r.bits.size() != static_cast<std::size_t>(r.rows) * r.cols) {
    throw std::invalid_argument(std::string(who) + ": bit storage does not match shape");
  }
  for (std::uint8_t b : r.bits) {
    if (b != 0 && b != 1) throw std::invalid_argument(std::string(who) + ": entries must be 0 or 1");
  }
}

void check_same_shape(const BitArray& r, const BitArray& s, const char* who) {
  check_shape(r, who);
  check_shape(s, who);
  if (r.rows != s.rows || r.cols != s.cols) {
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
  }
}

}  // namespace

BitArray BitArray::zeros(std::uint32_t rows, std::uint32_t cols) {
  BitArray r;
  r.rows = rows;
  r.cols = cols;
  r.bits.assign(static_cast<std::size_t>(rows) * cols, 0);
  return r;
}

std::uint8_t BitArray::at(std::uint32_t row, std::uint32_t col) const {
  if (row >= rows || col >= cols) throw std::out_of_range("BitArray::at: index out of range");
  return bits[static_cast<std::size_t>(row) * cols + col];
}

void BitArray::set(std::uint32_t row, std::uint32_t col, std::uint8_t value) {
  if (row >= rows || col >= cols) throw std::out_of_range("BitArray::set: index out of range");
  if (value != 0 && value != 1) throw std::invalid_argument("BitArray::set: value must be 0 or 1");
  bits[static_cast<std::size_t>(row) * cols + col] = value;
}

bool e1_equivalent_within(const BitArray& r, const BitArray& s, std::uint32_t m) {
  check_same_shape(r, s, "e1_equivalent_within");
  if (m > r.rows) throw std::invalid_argument("e1_equivalent_within: m exceeds the row count");
  return !first_differing_row(r, s, m).has_value();
}

std::optional<std::uint32_t> first_differing_row(const BitArray& r, const BitArray& s,
                                                 std::uint32_t m) {
  check_same_shape(r, s, "first_differing_row");
  for (std::uint32_t row = m; row < r.rows; ++row) {
    for (std::uint32_t col = 0; col < r.cols; ++col) {
      if (r.at(row, col) != s.at(row, col)) return row;
    }
  }
  return std::nullopt;
}

KnotTypeId assign_knot_type(std::uint32_t n, std::uint32_t k, int l, const BitArray& r) {
  check_shape(r, "assign_knot_type");
  if (l != 0 && l != 1) throw std::invalid_argument("assign_knot_type: l must be 0 or 1");
  if (n >= 2 * r.rows || k >= r.cols) {
    throw std::out_of_range("assign_knot_type: index outside the truncation window");
  }
  if (n % 2 == 1) return registry_type(n, k, l);  // calibration row
  const std::uint8_t bit = r.at(n / 2, k);
  return registry_type(n, k, bit == 0 ? l : 1 - l);
}

Configuration build_configuration(const BitArray& r, int segments_per_crossing) {
  check_shape(r, "build_configuration");
  Configuration config;
  config.rows = r.rows;
  config.cols = r.cols;
  config.pq = pq_sets(r.rows, r.cols);
  for (std::uint32_t n = 0; n < 2 * r.rows; ++n) {
    for (std::uint32_t k = 0; k < r.cols; ++k) {
      for (int l = 0; l <= 1; ++l) {
        Ball ball = ball_spec(n, k, l);
        KnotSlot slot;
        slot.type = assign_knot_type(n, k, l, r);
        slot.pd = torus_knot_pd(static_cast<int>(slot.type.braid_parameter));
        slot.curve = embed_knot_in_ball(slot.type, ball, segments_per_crossing);
        config.knots.emplace(GridIndex{n, k, l}, std::move(slot));
        config.balls.push_back(std::move(ball));
      }
    }
  }
  return config;
}

namespace {

std::string index_name(std::uint32_t n, std::uint32_t k, int l) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

// Verified-mode certification of one slot: the diagram's recomputed
// determinant must agree with the stored index.
void certify_slot(const KnotSlot& slot, std::uint32_t n, std::uint32_t k, int l) {
  const std::uint64_t stored = knot_determinant(slot.type);
  const std::uint64_t recomputed = pd_determinant(slot.pd);
  if (recomputed != stored) {
    throw std::runtime_error("decode_configuration: type corruption at ball " +
                             index_name(n, k, l) + ": stored determinant " +
                             std::to_string(stored) + ", diagram determinant " +
                             std::to_string(recomputed));
  }
}

}  // namespace

BitArray decode_configuration(const Configuration& config, DecodeMode mode) {
  if (config.rows < 1 || config.cols < 1) {
    throw std::invalid_argument("decode_configuration: empty configuration");
  }
  BitArray out = BitArray::zeros(config.rows, config.cols);
  for (std::uint32_t m = 0; m < config.rows; ++m) {
    const std::uint32_t n = 2 * m;
    for (std::uint32_t k = 0; k < config.cols; ++k) {
      const KnotSlot& slot = config.knot_at(n, k, 0);
      const KnotTypeId t0 = registry_type(n, k, 0);
      const KnotTypeId t1 = registry_type(n, k, 1);

      std::uint8_t bit;
      if (mode == DecodeMode::trusted) {
        if (slot.type == t0) {
          bit = 0;
        } else if (slot.type == t1) {
          bit = 1;
        } else {
          throw std::runtime_error("decode_configuration: unknown type at ball " +
                                   index_name(n, k, 0) + ": index " +
                                   std::to_string(slot.type.index) +
                                   " matches no registry entry in window");
        }
      } else {
        certify_slot(slot, n, k, 0);
        const std::uint64_t det = pd_determinant(slot.pd);
        if (det == knot_determinant(t0)) {
          bit = 0;
        } else if (det == knot_determinant(t1)) {
          bit = 1;
        } else {
          throw std::runtime_error("decode_configuration: unknown type at ball " +
                                   index_name(n, k, 0) + ": determinant " + std::to_string(det) +
                                   " matches no registry entry in window");
        }
        // capsule partner must carry the complementary type
        const KnotSlot& partner = config.knot_at(n, k, 1);
        certify_slot(partner, n, k, 1);
        const KnotTypeId expected = bit == 0 ? t1 : t0;
        if (!(partner.type == expected)) {
          throw std::runtime_error("decode_configuration: type corruption at ball " +
                                   index_name(n, k, 1) +
                                   ": capsule partner does not complement the decoded bit");
        }
      }
      out.set(m, k, bit);
    }
  }
  if (mode == DecodeMode::verified) {
    // calibration rows never depend on bits; verify them too
    for (std::uint32_t n = 1; n < 2 * config.rows; n += 2) {
      for (std::uint32_t k = 0; k < config.cols; ++k) {
        for (int l = 0; l <= 1; ++l) {
          const KnotSlot& slot = config.knot_at(n, k, l);
          if (!(slot.type == registry_type(n, k, l))) {
            throw std::runtime_error("decode_configuration: type corruption at ball " +
                                     index_name(n, k, l) + ": calibration row carries a foreign type");
          }
          certify_slot(slot, n, k, l);
        }
      }
    }
  }
  return out;
}

Matching match_configurations(const Configuration& c, const Configuration& cp) {
  if (c.rows != cp.rows || c.cols != cp.cols) {
    throw std::runtime_error("match_configurations: no matching: truncation shapes differ");
  }
  if (c.registry_bijection != cp.registry_bijection || c.registry_family != cp.registry_family) {
    throw std::runtime_error("match_configurations: no matching: registries differ");
  }

  Matching matching;
  for (std::uint32_t n = 0; n < 2 * c.rows; ++n) {
    for (std::uint32_t k = 0; k < c.cols; ++k) {
      // Each knot type occurs exactly once per configuration and types of
      // capsule (n,k) occur only there, so rho maps the capsule to itself,
      // either identically or swapped.
      const KnotSlot& from0 = c.knot_at(n, k, 0);
      const KnotSlot& from1 = c.knot_at(n, k, 1);
      const KnotSlot& to0 = cp.knot_at(n, k, 0);
      const KnotSlot& to1 = cp.knot_at(n, k, 1);

      int image0;
      if (from0.type == to0.type && from1.type == to1.type) {
        image0 = 0;
      } else if (from0.type == to1.type && from1.type == to0.type) {
        image0 = 1;
      } else {
        throw std::runtime_error("match_configurations: no matching: knot types of capsule (" +
                                 std::to_string(n) + "," + std::to_string(k) +
                                 ") are absent from the right configuration");
      }
      matching.rho.push_back({GridIndex{n, k, 0}, GridIndex{n, k, image0}});
      matching.rho.push_back({GridIndex{n, k, 1}, GridIndex{n, k, 1 - image0}});
      matching.certificates.push_back(
          certify_distinct(from0.type, (image0 == 0 ? to0 : to1).type));
      matching.certificates.push_back(
          certify_distinct(from1.type, (image0 == 0 ? to1 : to0).type));
    }
  }
  return matching;
}

bool configurations_equivalent_within(const Configuration& c, const Configuration& cp,
                                      std::uint32_t m) {
  return e1_equivalent_within(decode_configuration(c), decode_configuration(cp), m);
}

double continuity_bound(std::uint32_t d) {
  return std::ldexp(1.0, 1 - 4 * (2 * static_cast<int>(d) + 1));
}

}  // namespace knotgrid
