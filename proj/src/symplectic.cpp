#include "hymcg/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "hymcg/snf.hpp"

namespace hymcg {

namespace {

// J in the interleaved basis: block diagonal [[0,1],[-1,0]].
int formEntry(int r, int c) {
  if (r / 2 != c / 2) return 0;
  if (r % 2 == 0 && c == r + 1) return 1;
  if (r % 2 == 1 && c == r - 1) return -1;
  return 0;
}

std::vector<BigInt> applyForm(const std::vector<BigInt>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<BigInt> jv(n);
  for (int i = 0; i < n; i += 2) {
    jv[i] = v[i + 1];
    jv[i + 1] = -v[i];
  }
  return jv;
}

}  // namespace

SympMatrix::SympMatrix(int size, std::optional<std::int64_t> modulus)
    : size_(size), modulus_(modulus), e_(size * size, BigInt(0)) {
  if (size <= 0 || size % 2 != 0)
    throw Error("symplectic matrix size must be positive and even");
  if (modulus_ && (*modulus_ < 2 || *modulus_ >= (std::int64_t{1} << 31)))
    throw InvalidModulus("modulus must be in [2, 2^31)");
}

SympMatrix SympMatrix::identity(int size, std::optional<std::int64_t> modulus) {
  SympMatrix m(size, modulus);
  for (int i = 0; i < size; ++i) m.e_[i * size + i] = 1;
  return m;
}

BigInt SympMatrix::canon(BigInt v) const {
  if (!modulus_) return v;
  BigInt r = v % *modulus_;
  if (r < 0) r += *modulus_;
  return r;
}

void SympMatrix::set(int r, int c, BigInt v) {
  e_[r * size_ + c] = canon(std::move(v));
}

SympMatrix SympMatrix::operator*(const SympMatrix& rhs) const {
  if (rhs.size_ != size_ || rhs.modulus_ != modulus_)
    throw Error("matrix product requires matching size and modulus");
  SympMatrix out(size_, modulus_);
  for (int i = 0; i < size_; ++i) {
    for (int k = 0; k < size_; ++k) {
      const BigInt& a = e_[i * size_ + k];
      if (a == 0) continue;
      for (int j = 0; j < size_; ++j) {
        out.e_[i * size_ + j] += a * rhs.e_[k * size_ + j];
      }
    }
    if (modulus_)
      for (int j = 0; j < size_; ++j)
        out.e_[i * size_ + j] = out.canon(out.e_[i * size_ + j]);
  }
  return out;
}

SympMatrix SympMatrix::inverse() const {
  // M^{-1} = J^{-1} M^T J = -J M^T J, integral for symplectic M.
  SympMatrix out(size_, modulus_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      // (J M^T J)_{ij} = sum_{k,l} J_{ik} M_{jk}... expanded directly below.
      BigInt acc = 0;
      for (int k = 0; k < size_; ++k) {
        const int jik = formEntry(i, k);
        if (jik == 0) continue;
        for (int l = 0; l < size_; ++l) {
          const int jlj = formEntry(l, j);
          if (jlj == 0) continue;
          acc += BigInt(jik) * e_[l * size_ + k] * jlj;
        }
      }
      out.e_[i * size_ + j] = out.canon(-acc);
    }
  return out;
}

SympMatrix SympMatrix::negated() const {
  SympMatrix out(size_, modulus_);
  for (int i = 0; i < size_ * size_; ++i) out.e_[i] = out.canon(-e_[i]);
  return out;
}

SympMatrix SympMatrix::reducedMod(std::int64_t m) const {
  SympMatrix out(size_, m);
  for (int i = 0; i < size_ * size_; ++i) out.e_[i] = out.canon(e_[i]);
  return out;
}

bool SympMatrix::isIdentity() const { return *this == identity(size_, modulus_); }

bool SympMatrix::isMinusIdentity() const {
  return *this == identity(size_, modulus_).negated();
}

bool SympMatrix::isSymplectic() const {
  // M^T J M == J, entrywise.
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      BigInt acc = 0;
      for (int k = 0; k < size_; ++k) {
        const BigInt& m_ki = e_[k * size_ + i];
        if (m_ki == 0) continue;
        // (J M)_{kj}
        BigInt jm = 0;
        if (k % 2 == 0)
          jm = e_[(k + 1) * size_ + j];
        else
          jm = -e_[(k - 1) * size_ + j];
        acc += m_ki * jm;
      }
      if (canon(acc) != canon(BigInt(formEntry(i, j)))) return false;
    }
  return true;
}

std::string SympMatrix::key() const {
  if (!modulus_) throw Error("canonical keys exist only for modular matrices");
  std::string out;
  out.reserve(static_cast<std::size_t>(size_) * size_ * 4);
  for (const auto& v : e_) {
    const auto r = static_cast<std::uint32_t>(v.convert_to<std::int64_t>());
    out.push_back(static_cast<char>(r & 0xff));
    out.push_back(static_cast<char>((r >> 8) & 0xff));
    out.push_back(static_cast<char>((r >> 16) & 0xff));
    out.push_back(static_cast<char>((r >> 24) & 0xff));
  }
  return out;
}

BigInt symplecticPairing(const std::vector<BigInt>& x,
                         const std::vector<BigInt>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw Error("pairing needs two vectors of equal even length");
  BigInt acc = 0;
  for (std::size_t i = 0; i < x.size(); i += 2)
    acc += x[i] * y[i + 1] - x[i + 1] * y[i];
  return acc;
}

ChainClasses chainClasses(int genus) {
  if (genus < 1)
    throw InvalidGenus("chain classes need genus >= 1, got " +
                       std::to_string(genus));
  const int dim = 2 * genus;
  auto basis = [&](int i) {  // 0-based coordinate index
    std::vector<BigInt> v(dim, BigInt(0));
    v[i] = 1;
    return v;
  };

  std::vector<std::vector<BigInt>> vs;
  vs.reserve(2 * genus + 1);
  vs.push_back(basis(0));  // a1
  for (int i = 1; i <= genus; ++i) {
    vs.push_back(basis(2 * i - 1));  // v_{2i} = b_i
    if (i < genus) {
      auto v = basis(2 * i - 2);  // a_i + a_{i+1}
      v[2 * i] = 1;
      vs.push_back(std::move(v));
    }
  }
  vs.push_back(basis(2 * genus - 2));  // v_{2g+1} = a_g

  // Chain pattern, primitivity and spanning; failure here is a bug.
  for (int i = 0; i < 2 * genus + 1; ++i) {
    for (int j = i + 1; j < 2 * genus + 1; ++j) {
      const BigInt p = symplecticPairing(vs[i], vs[j]);
      if (j == i + 1 ? abs(p) != 1 : p != 0)
        throw Error("internal: chain class pairing pattern violated");
    }
    BigInt g = 0;
    for (const auto& c : vs[i]) g = gcd(g, c);
    if (g != 1) throw Error("internal: chain class not primitive");
  }
  SparseIntMatrix m(2 * genus + 1, dim);
  for (int i = 0; i < 2 * genus + 1; ++i)
    for (int j = 0; j < dim; ++j) m.set(i, j, vs[i][j]);
  const auto snf = smithNormalForm(std::move(m));
  if (snf.rank != dim ||
      std::any_of(snf.invariantFactors.begin(), snf.invariantFactors.end(),
                  [](const BigInt& d) { return d != 1; }))
    throw Error("internal: chain classes do not span the full lattice");

  return ChainClasses{genus, std::move(vs)};
}

SympMatrix transvection(const std::vector<BigInt>& v,
                        std::optional<std::int64_t> modulus) {
  return transvectionPower(v, 1, modulus);
}

SympMatrix transvectionPower(const std::vector<BigInt>& v, const BigInt& exponent,
                             std::optional<std::int64_t> modulus) {
  const int dim = static_cast<int>(v.size());
  SympMatrix m = SympMatrix::identity(dim, modulus);
  const auto jv = applyForm(v);
  for (int i = 0; i < dim; ++i) {
    if (jv[i] == 0) continue;
    for (int j = 0; j < dim; ++j)
      m.set(i, j, m.at(i, j) + exponent * jv[i] * v[j]);
  }
  return m;
}

SympMatrix evaluate(const TwistWord& w, std::optional<std::int64_t> modulus) {
  const auto chain = chainClasses(w.genus());
  SympMatrix acc = SympMatrix::identity(2 * w.genus(), modulus);
  for (const auto& l : w.letters())
    acc = acc * transvectionPower(chain.vectors[l.index - 1], l.exponent, modulus);
  return acc;
}

bool levelMembership(const TwistWord& w, std::int64_t m) {
  if (m < 2) throw InvalidModulus("level modulus must be >= 2");
  return evaluate(w, m).isIdentity();
}

std::vector<SympMatrix> chainTransvections(int genus,
                                           std::optional<std::int64_t> modulus,
                                           bool squares) {
  const auto chain = chainClasses(genus);
  std::vector<SympMatrix> out;
  out.reserve(chain.vectors.size());
  for (const auto& v : chain.vectors)
    out.push_back(transvectionPower(v, squares ? 2 : 1, modulus));
  return out;
}

bool GroupClosure::contains(const SympMatrix& m) const {
  if (m.size() != size_ || !m.modulus() || *m.modulus() != modulus_) return false;
  return std::binary_search(keys_.begin(), keys_.end(), m.key());
}

GroupClosure groupClosure(const std::vector<SympMatrix>& generators,
                          std::uint64_t cap) {
  if (generators.empty()) throw Error("closure needs at least one generator");
  const int size = generators.front().size();
  const auto modulus = generators.front().modulus();
  if (!modulus)
    throw InvalidModulus("closure requires modular generators");
  for (const auto& g : generators) {
    if (g.size() != size || g.modulus() != modulus)
      throw Error("closure generators must share size and modulus");
    if (!g.isSymplectic())
      throw Error("closure generator is not symplectic");
  }

  std::vector<SympMatrix> step = generators;
  for (const auto& g : generators) step.push_back(g.inverse());

  std::unordered_set<std::string> seen;
  std::deque<SympMatrix> queue;
  const SympMatrix id = SympMatrix::identity(size, modulus);
  seen.insert(id.key());
  queue.push_back(id);

  while (!queue.empty()) {
    const SympMatrix cur = queue.front();
    queue.pop_front();
    for (const auto& g : step) {
      SympMatrix next = cur * g;
      auto [it, fresh] = seen.insert(next.key());
      if (fresh) {
        if (seen.size() > cap) throw ClosureTooLarge(seen.size(), cap);
        queue.push_back(std::move(next));
      }
    }
  }

  GroupClosure closure;
  closure.size_ = size;
  closure.modulus_ = *modulus;
  closure.order_ = seen.size();
  closure.keys_.assign(seen.begin(), seen.end());
  std::sort(closure.keys_.begin(), closure.keys_.end());
  return closure;
}

BigInt spOrder(int genus, std::int64_t p) {
  if (genus < 1) throw InvalidGenus("spOrder needs genus >= 1");
  if (p < 2) throw UnsupportedModulus("spOrder needs a prime modulus");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw UnsupportedModulus(std::to_string(p) + " is not prime");
  BigInt order = 1;
  const BigInt bp = p;
  for (int i = 0; i < genus * genus; ++i) order *= bp;
  BigInt q = 1;
  for (int i = 1; i <= genus; ++i) {
    q *= bp * bp;
    order *= q - 1;
  }
  return order;
}

bool braidRelationsHold(int genus, std::optional<std::int64_t> modulus) {
  const auto ts = chainTransvections(genus, modulus);
  const int k = static_cast<int>(ts.size());
  for (int i = 0; i + 1 < k; ++i) {
    if (ts[i] * ts[i + 1] * ts[i] != ts[i + 1] * ts[i] * ts[i + 1]) return false;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j)
      if (ts[i] * ts[j] != ts[j] * ts[i]) return false;
  return true;
}

}  // namespace hymcg
