// Elimination backends for prime fields. Three tiers by modulus size:
//   p <= 13      byte lanes, 8 per machine word, lazily reduced
//   p <= 32749   uint32 entries, lazily reduced
//   otherwise    uint64 entries, reduced every operation
// All tiers make the same pivot choices as the generic template
// (column left-to-right, first nonzero row top-down), so results are
// bit-identical across backends.
#include <cstdint>
#include <cstring>
#include <vector>

#include "gorhom/matrix.hpp"

namespace gorhom::modp {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// ---------------------------------------------------------------- p <= 13
// A row is a byte array viewed as uint64 words. Bytes hold unreduced sums;
// dirt[r] bounds the largest possible byte of row r. The SWAR update
// t += f*s is carry-free per byte as long as every byte stays <= 255,
// which the dirt budget guarantees, and f*s_b <= (p-1)^2 <= 144.
struct EngineU8 {
  long rows, cols, wpr;
  std::uint64_t p;
  std::vector<std::uint64_t> buf;
  std::vector<int> dirt;
  std::uint8_t red[256];

  EngineU8(const std::uint64_t* a, long r, long c, std::uint64_t p_) : rows(r), cols(c), p(p_) {
    wpr = (cols + 7) / 8;
    buf.assign(static_cast<std::size_t>(rows) * wpr, 0);
    dirt.assign(rows, static_cast<int>(p) - 1);
    for (int v = 0; v < 256; ++v) red[v] = static_cast<std::uint8_t>(v % p);
    for (long i = 0; i < rows; ++i) {
      std::uint8_t* row = bytes(i);
      for (long j = 0; j < cols; ++j)
        row[j] = static_cast<std::uint8_t>(a[static_cast<std::size_t>(i) * cols + j] % p);
    }
  }
  std::uint8_t* bytes(long r) {
    return reinterpret_cast<std::uint8_t*>(buf.data() + static_cast<std::size_t>(r) * wpr);
  }
  void reduce_row(long r) {
    std::uint8_t* row = bytes(r);
    for (long j = 0; j < cols; ++j) row[j] = red[row[j]];
    dirt[r] = static_cast<int>(p) - 1;
  }
  std::uint64_t value(long r, long c) { return red[bytes(r)[c]]; }

  void scale_row(long r, std::uint64_t f) {
    reduce_row(r);
    std::uint64_t* w = buf.data() + static_cast<std::size_t>(r) * wpr;
    for (long j = 0; j < wpr; ++j) w[j] *= f;  // bytes <= (p-1)^2, no carry
    reduce_row(r);
  }

  // row r += f * row pr, touching only words from column c0 on
  void axpy(long r, long pr, std::uint64_t f, long c0) {
    std::uint64_t* t = buf.data() + static_cast<std::size_t>(r) * wpr;
    const std::uint64_t* s = buf.data() + static_cast<std::size_t>(pr) * wpr;
    for (long w = c0 / 8; w < wpr; ++w) t[w] += f * s[w];
    dirt[r] += static_cast<int>(f * (p - 1));
  }

  Echelon run(bool reduced) {
    Echelon e;
    long pr = 0;
    const int budget_cap = 255;
    for (long c = 0; c < cols && pr < rows; ++c) {
      long sel = -1;
      for (long r = pr; r < rows; ++r)
        if (value(r, c) != 0) { sel = r; break; }
      if (sel < 0) continue;
      if (sel != pr) {
        std::uint64_t* x = buf.data() + static_cast<std::size_t>(sel) * wpr;
        std::uint64_t* y = buf.data() + static_cast<std::size_t>(pr) * wpr;
        for (long w = 0; w < wpr; ++w) std::swap(x[w], y[w]);
        std::swap(dirt[sel], dirt[pr]);
      }
      reduce_row(pr);
      std::uint64_t pv = bytes(pr)[c];
      if (pv != 1) scale_row(pr, inv_mod(pv, p));
      long rfirst = reduced ? 0 : pr + 1;
      for (long r = rfirst; r < rows; ++r) {
        if (r == pr) continue;
        std::uint64_t v = value(r, c);
        if (v == 0) continue;
        std::uint64_t f = p - v;
        if (dirt[r] + static_cast<int>(f * (p - 1)) > budget_cap) reduce_row(r);
        axpy(r, pr, f, c);
      }
      e.pivots.push_back(c);
      ++pr;
    }
    e.rank = pr;
    return e;
  }

  void write_back(std::uint64_t* a) {
    for (long i = 0; i < rows; ++i) {
      reduce_row(i);
      const std::uint8_t* row = bytes(i);
      for (long j = 0; j < cols; ++j) a[static_cast<std::size_t>(i) * cols + j] = row[j];
    }
  }
};

// ---------------------------------------------------------------- p <= 32749
struct EngineU32 {
  long rows, cols;
  std::uint64_t p;
  std::vector<std::uint32_t> buf;
  std::vector<std::uint64_t> dirt;

  EngineU32(const std::uint64_t* a, long r, long c, std::uint64_t p_) : rows(r), cols(c), p(p_) {
    buf.resize(static_cast<std::size_t>(rows) * cols);
    dirt.assign(rows, p - 1);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<std::uint32_t>(a[i] % p);
  }
  std::uint32_t* row(long r) { return buf.data() + static_cast<std::size_t>(r) * cols; }
  void reduce_row(long r) {
    std::uint32_t* t = row(r);
    for (long j = 0; j < cols; ++j) t[j] = static_cast<std::uint32_t>(t[j] % p);
    dirt[r] = p - 1;
  }
  std::uint64_t value(long r, long c) { return row(r)[c] % p; }

  Echelon run(bool reduced) {
    Echelon e;
    long pr = 0;
    const std::uint64_t cap = 0xFFFFFFFFull;
    for (long c = 0; c < cols && pr < rows; ++c) {
      long sel = -1;
      for (long r = pr; r < rows; ++r)
        if (value(r, c) != 0) { sel = r; break; }
      if (sel < 0) continue;
      if (sel != pr) {
        std::uint32_t* x = row(sel);
        std::uint32_t* y = row(pr);
        for (long j = 0; j < cols; ++j) std::swap(x[j], y[j]);
        std::swap(dirt[sel], dirt[pr]);
      }
      reduce_row(pr);
      std::uint32_t* pivot = row(pr);
      if (pivot[c] != 1) {
        std::uint64_t f = inv_mod(pivot[c], p);
        for (long j = 0; j < cols; ++j)
          pivot[j] = static_cast<std::uint32_t>((f * pivot[j]) % p);
      }
      long rfirst = reduced ? 0 : pr + 1;
      for (long r = rfirst; r < rows; ++r) {
        if (r == pr) continue;
        std::uint64_t v = value(r, c);
        if (v == 0) continue;
        std::uint64_t f = p - v;
        if (dirt[r] + f * (p - 1) > cap) reduce_row(r);
        std::uint32_t* t = row(r);
        for (long j = c; j < cols; ++j)
          t[j] = static_cast<std::uint32_t>(t[j] + f * pivot[j]);
        dirt[r] += f * (p - 1);
      }
      e.pivots.push_back(c);
      ++pr;
    }
    e.rank = pr;
    return e;
  }

  void write_back(std::uint64_t* a) {
    for (long i = 0; i < rows; ++i) {
      reduce_row(i);
      const std::uint32_t* t = row(i);
      for (long j = 0; j < cols; ++j) a[static_cast<std::size_t>(i) * cols + j] = t[j];
    }
  }
};

// ---------------------------------------------------------------- any p
Echelon run_u64(std::uint64_t* a, long rows, long cols, std::uint64_t p, bool reduced) {
  auto at = [&](long r, long c) -> std::uint64_t& { return a[static_cast<std::size_t>(r) * cols + c]; };
  auto mulmod = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  for (std::size_t i = 0; i < static_cast<std::size_t>(rows) * cols; ++i) a[i] %= p;
  Echelon e;
  long pr = 0;
  for (long c = 0; c < cols && pr < rows; ++c) {
    long sel = -1;
    for (long r = pr; r < rows; ++r)
      if (at(r, c) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pr)
      for (long j = 0; j < cols; ++j) std::swap(at(sel, j), at(pr, j));
    if (at(pr, c) != 1) {
      std::uint64_t f = inv_mod(at(pr, c), p);
      for (long j = c; j < cols; ++j) at(pr, j) = mulmod(at(pr, j), f);
    }
    long rfirst = reduced ? 0 : pr + 1;
    for (long r = rfirst; r < rows; ++r) {
      if (r == pr) continue;
      std::uint64_t v = at(r, c);
      if (v == 0) continue;
      std::uint64_t f = p - v;
      for (long j = c; j < cols; ++j)
        at(r, j) = (at(r, j) + mulmod(f, at(pr, j))) % p;
    }
    e.pivots.push_back(c);
    ++pr;
  }
  e.rank = pr;
  return e;
}

}  // namespace

Echelon echelon_inplace(std::uint64_t* a, long rows, long cols, std::uint64_t p, bool reduced) {
  if (rows == 0 || cols == 0) return {};
  if (p <= 13) {
    EngineU8 eng(a, rows, cols, p);
    Echelon e = eng.run(reduced);
    eng.write_back(a);
    return e;
  }
  if (p <= 32749) {
    EngineU32 eng(a, rows, cols, p);
    Echelon e = eng.run(reduced);
    eng.write_back(a);
    return e;
  }
  return run_u64(a, rows, cols, p, reduced);
}

}  // namespace gorhom::modp
