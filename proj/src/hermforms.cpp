#include "daggerkit/hermforms.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "daggerkit/errors.hpp"
#include "daggerkit/rng.hpp"

namespace dk {

std::string to_string(const SignatureQuad& s) {
  std::ostringstream os;
  os << s.p1 << "," << s.p2 << "," << s.p3 << "," << s.p4;
  return os.str();
}

Pairing::Pairing(SuperDims space_, Matrix gram_, Convention conv_)
    : space(space_), gram(std::move(gram_)), conv(conv_) {
  if (gram.rows() != space.total() || gram.cols() != space.total())
    throw DimensionMismatch("pairing matrix must be square of size p+q");
  if (!gram.isInvertible()) throw NotInvertible("pairings must be isomorphisms");
}

Pairing unitPairing(Convention conv) {
  return Pairing(SuperDims{1, 0}, Matrix::identity(1), conv);
}

bool checkPairing(const Pairing& h) {
  const SuperDims d = h.space;
  for (std::size_t i = 0; i < d.total(); ++i)
    for (std::size_t j = 0; j < d.total(); ++j)
      if (d.deg(i) != d.deg(j) && !h.gram.at(i, j).isZero()) return false;
  // categorical condition d(h) . eta = h on morphism matrices
  Matrix mor = h.mor();
  Matrix eta = structureIso(StructureKind::Eta, d, std::nullopt, h.conv).m;
  return mor.conjTranspose() * eta == mor;
}

EvenMap dagger(const EvenMap& t, const Pairing& hDom, const Pairing& hCod) {
  if (hDom.conv != hCod.conv) throw ConventionMismatch("dagger pairings");
  if (t.dom != hDom.space || t.cod != hCod.space)
    throw DimensionMismatch("dagger: map does not match pairings");
  Matrix m = hDom.mor().inverse() * t.m.conjTranspose() * hCod.mor();
  return EvenMap(hCod.space, hDom.space, std::move(m));
}

Pairing transfer(const Pairing& h, const EvenMap& g) {
  if (g.cod != h.space) throw DimensionMismatch("transfer: cod(g) != space of h");
  if (!g.isInvertible()) throw NotInvertible("transfer needs an isomorphism");
  return Pairing(g.dom, g.m.transpose() * h.gram * g.m.conjugate(), h.conv);
}

Pairing tensorPairingWithSign(const Pairing& h1, const Pairing& h2, bool koszulSign) {
  SuperDims d = tensor(h1.space, h2.space);
  auto pairs = tensorSlotPairs(h1.space, h2.space);
  Matrix g(d.total(), d.total());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      auto [i1, j1] = pairs[r];
      auto [i2, j2] = pairs[c];
      Scalar v = h1.gram.at(i1, i2) * h2.gram.at(j1, j2);
      if (koszulSign && h1.space.deg(i2) && h2.space.deg(j1)) v = -v;
      g.at(r, c) = v;
    }
  return Pairing(d, std::move(g), h1.conv);
}

Pairing tensorPairing(const Pairing& h1, const Pairing& h2) {
  if (h1.conv != h2.conv) throw ConventionMismatch("tensorPairing");
  return tensorPairingWithSign(h1, h2, h1.conv == Convention::SUPER);
}

namespace {

Matrix parityOf(SuperDims d) {
  return structureIso(StructureKind::Parity, d, std::nullopt, Convention::SUPER).m;
}

}  // namespace

Pairing dualPairing(const Pairing& h) {
  Matrix g = h.gram.transpose().inverse();
  if (h.conv == Convention::GRADED) g = g * parityOf(h.space);
  return Pairing(h.space, std::move(g), h.conv);
}

Pairing conjPairing(const Pairing& h) {
  return Pairing(h.space, h.gram.transpose().inverse().conjugate(), h.conv);
}

Pairing parityTwist(const Pairing& h) {
  return Pairing(h.space, parityOf(h.space) * h.gram, h.conv);
}

namespace {

std::pair<std::size_t, std::size_t> countSigns(const std::vector<Rat>& diag) {
  std::size_t pos = 0, neg = 0;
  for (const auto& d : diag) {
    if (sgn(d) > 0)
      ++pos;
    else if (sgn(d) < 0)
      ++neg;
    else
      throw NotInvertible("zero diagonal entry in congruence form");
  }
  return {pos, neg};
}

Matrix block(const Matrix& m, std::size_t lo, std::size_t hi) {
  Matrix b(hi - lo, hi - lo);
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = lo; j < hi; ++j) b.at(i - lo, j - lo) = m.at(i, j);
  return b;
}

}  // namespace

SignatureQuad signature(const Pairing& h) {
  if (!checkPairing(h)) throw NotAPairing("signature requires a valid pairing");
  SuperDims d = h.space;
  SignatureQuad sig;
  if (d.p > 0) {
    auto even = diagonalizeHermitian(block(h.gram, 0, d.p));
    std::tie(sig.p1, sig.p2) = countSigns(even.diag);
  }
  if (d.q > 0) {
    Matrix odd = block(h.gram, d.p, d.total());
    if (h.conv == Convention::SUPER) odd = Scalar(Rat(0), Rat(-1)) * odd;  // B = i C
    auto res = diagonalizeHermitian(odd);
    std::tie(sig.p3, sig.p4) = countSigns(res.diag);
  }
  return sig;
}

std::vector<SignatureQuad> classSignatures(PositivityClass cls, SuperDims dims) {
  switch (cls) {
    case PositivityClass::SHILB:
      return {SignatureQuad{dims.p, 0, dims.q, 0}};
    case PositivityClass::SHILB_ODD_NEG:
      return {SignatureQuad{dims.p, 0, 0, dims.q}};
    case PositivityClass::SHERM: {
      std::vector<SignatureQuad> all;
      for (std::size_t a = 0; a <= dims.p; ++a)
        for (std::size_t b = 0; b <= dims.q; ++b)
          all.push_back(SignatureQuad{a, dims.p - a, b, dims.q - b});
      return all;
    }
  }
  throw std::logic_error("unreachable");
}

bool sigInClass(const SignatureQuad& sig, PositivityClass cls, SuperDims dims) {
  auto sigs = classSignatures(cls, dims);
  return std::find(sigs.begin(), sigs.end(), sig) != sigs.end();
}

Pairing canonicalPairing(const SignatureQuad& sig, Convention conv) {
  SuperDims d{sig.p1 + sig.p2, sig.p3 + sig.p4};
  Matrix g = Matrix::identity(d.total());
  for (std::size_t k = sig.p1; k < d.p; ++k) g.at(k, k) = Scalar(-1);
  Scalar oddPos = conv == Convention::SUPER ? Scalar::i() : Scalar(1);
  for (std::size_t k = d.p; k < d.p + sig.p3; ++k) g.at(k, k) = oddPos;
  for (std::size_t k = d.p + sig.p3; k < d.total(); ++k) g.at(k, k) = -oddPos;
  return Pairing(d, std::move(g), conv);
}

bool isoPositive(const EvenMap& f, const Pairing& h, PositivityClass cls) {
  if (f.dom != h.space || f.cod != h.space)
    throw DimensionMismatch("isoPositive: f must be an endomorphism of h's space");
  if (!f.isInvertible()) return false;
  Pairing twisted(h.space, f.m.transpose() * h.gram, h.conv);
  if (!checkPairing(twisted)) return false;
  return sigInClass(signature(twisted), cls, h.space);
}

EvenMap lambdaAuto(const Pairing& h) {
  SuperDims d = h.space;
  EvenMap idDual = EvenMap::identity(d);
  EvenMap coev = structureIso(StructureKind::CoevStd, d, std::nullopt, h.conv);
  EvenMap step1 = tensor(idDual, coev);                       // x* -> x* (x) (x (x) x*)
  EvenMap alphaInv = assoc(d, d, d).inverse();                // -> (x* (x) x) (x) x*
  EvenMap step2 = tensor(braid(d, d), idDual);                // -> (x (x) x*) (x) x*
  Pairing hPair = tensorPairing(h, dualPairing(h));
  EvenMap coevDagger = dagger(coev, unitPairing(h.conv), hPair);
  EvenMap step3 = tensor(coevDagger, idDual);                 // -> 1 (x) x* = x*
  return compose(step3, compose(step2, compose(alphaInv, step1)));
}

bool compactness(PositivityClass cls, SuperDims dims, CompactnessMode mode) {
  auto sigs = classSignatures(cls, dims);
  std::vector<SignatureQuad> dual, target;
  for (const auto& s : sigs) {
    Pairing rep = canonicalPairing(s, Convention::SUPER);
    dual.push_back(signature(dualPairing(rep)));
    target.push_back(mode == CompactnessMode::DAGGER_COMPACT
                         ? s
                         : signature(parityTwist(rep)));
  }
  std::sort(dual.begin(), dual.end());
  std::sort(target.begin(), target.end());
  return dual == target;
}

Pairing convEquivalence(const Pairing& h, ConvDirection direction) {
  bool toGraded = direction == ConvDirection::SUPER_TO_GRADED;
  if (h.conv != (toGraded ? Convention::SUPER : Convention::GRADED))
    throw ConventionMismatch("convEquivalence direction does not match the pairing");
  Scalar odd = toGraded ? Scalar(Rat(0), Rat(-1)) : Scalar::i();
  Matrix twist = Matrix::identity(h.space.total());
  for (std::size_t k = h.space.p; k < h.space.total(); ++k) twist.at(k, k) = odd;
  return Pairing(h.space, twist * h.gram,
                 toGraded ? Convention::GRADED : Convention::SUPER);
}

// --- congruence tooling -----------------------------------------------------

namespace {

bool isHermitianMatrix(const Matrix& m) { return m.transpose() == m.conjugate(); }

// basis change G -> B^T G conj(B), S -> S B
void applyBasisChange(Matrix& g, Matrix& s, const Matrix& b) {
  g = b.transpose() * g * b.conjugate();
  s = s * b;
}

}  // namespace

HermDiagonalization diagonalizeHermitian(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("diagonalizeHermitian");
  if (!isHermitianMatrix(m)) throw NotAPairing("diagonalizeHermitian wants M^T = conj(M)");
  std::size_t n = m.rows();
  Matrix g(m);
  Matrix s = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (g.at(k, k).isZero()) {
      std::size_t swap = k + 1;
      while (swap < n && g.at(swap, swap).isZero()) ++swap;
      if (swap < n) {
        Matrix b = Matrix::identity(n);
        b.at(k, k) = b.at(swap, swap) = Scalar(0);
        b.at(k, swap) = b.at(swap, k) = Scalar(1);
        applyBasisChange(g, s, b);
      } else {
        std::size_t other = k + 1;
        while (other < n && g.at(k, other).isZero()) ++other;
        if (other == n) throw NotInvertible("degenerate hermitian form");
        // e_k + e_other has norm 2 Re(b); e_k + i e_other has norm 2 Im(b)
        Matrix b = Matrix::identity(n);
        b.at(other, k) = sgn(g.at(k, other).re) != 0 ? Scalar(1) : Scalar::i();
        applyBasisChange(g, s, b);
      }
    }
    Scalar pivot = g.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g.at(i, k).isZero()) continue;
      Matrix b = Matrix::identity(n);
      b.at(k, i) = -(g.at(i, k) / pivot);
      applyBasisChange(g, s, b);
    }
  }
  HermDiagonalization out{std::move(s), {}};
  out.diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(g.at(k, k).im) != 0) throw NotAPairing("non-real diagonal after congruence");
    out.diag.push_back(g.at(k, k).re);
  }
  return out;
}

namespace {

struct Gaussian {
  mpz_class a, b;  // a + b i

  Gaussian operator*(const Gaussian& o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a};
  }
  Gaussian conjg() const { return {a, -b}; }
  mpz_class normSq() const { return a * a + b * b; }
  bool isZero() const { return a == 0 && b == 0; }
};

mpz_class roundDiv(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;
  return q;
}

Gaussian gaussianMod(const Gaussian& x, const Gaussian& y) {
  mpz_class n = y.normSq();
  Gaussian xc = x * y.conjg();
  Gaussian q{roundDiv(xc.a, n), roundDiv(xc.b, n)};
  Gaussian qy = q * y;
  return {x.a - qy.a, x.b - qy.b};
}

Gaussian gaussianGcd(Gaussian x, Gaussian y) {
  while (!y.isZero()) {
    Gaussian r = gaussianMod(x, y);
    x = y;
    y = r;
  }
  return x;
}

// For p = 1 mod 4, a Gaussian integer of norm p (Hermite-Serret).
Gaussian splitPrime(const mpz_class& p) {
  mpz_class exp = (p - 1) / 4;
  for (mpz_class a = 2;; ++a) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    if ((x * x) % p == p - 1) {
      Gaussian g = gaussianGcd(Gaussian{p, 0}, Gaussian{x, 1});
      if (g.normSq() == p) return g;
      return g.conjg();
    }
  }
}

std::optional<std::vector<std::pair<mpz_class, unsigned>>> factorInteger(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> factors;
  auto push = [&](const mpz_class& p) {
    if (!factors.empty() && factors.back().first == p)
      ++factors.back().second;
    else
      factors.emplace_back(p, 1);
  };
  for (mpz_class d = 2; d * d <= n && d < 20000000; d += (d == 2 ? 1 : 2))
    while (n % d == 0) {
      push(d);
      n /= d;
    }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
    push(n);
  }
  return factors;
}

}  // namespace

std::optional<Scalar> twoSquares(const Rat& r) {
  if (sgn(r) <= 0) return std::nullopt;
  mpz_class n = r.get_num() * r.get_den();
  auto factors = factorInteger(n);
  if (!factors) throw std::runtime_error("twoSquares: integer too hard to factor");
  Gaussian g{1, 0};
  for (const auto& [p, e] : *factors) {
    if (p == 2) {
      Gaussian root{1, 1};
      for (unsigned k = 0; k < e; ++k) g = g * root;
    } else if (p % 4 == 3) {
      if (e % 2 != 0) return std::nullopt;
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
      g = g * Gaussian{pk, 0};
    } else {
      Gaussian pi = splitPrime(p);
      for (unsigned k = 0; k < e; ++k) g = g * pi;
    }
  }
  Scalar s(Rat(g.a, r.get_den()), Rat(g.b, r.get_den()));
  if (s * conj(s) != Scalar(r)) throw std::logic_error("twoSquares internal check failed");
  return s;
}

namespace {

std::uint64_t fnv(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// v with sum d_i |v_i|^2 = t for nonzero real d_i and t of any signs.
// Pure ratios first, then a deterministic grid, then randomized descent.
std::optional<std::vector<Scalar>> representValue(const std::vector<Rat>& d, const Rat& t,
                                                  Rng& rng) {
  std::size_t k = d.size();
  std::vector<Scalar> v(k);
  auto closeWith = [&](std::size_t pivot, const Rat& residue) -> bool {
    Rat ratio = residue / d[pivot];
    if (sgn(ratio) <= 0) return false;
    auto s = twoSquares(ratio);
    if (!s) return false;
    v[pivot] = *s;
    return true;
  };
  for (std::size_t j = 0; j < k; ++j) {
    v.assign(k, Scalar(0));
    if (closeWith(j, t)) return v;
  }
  if (k == 1) return std::nullopt;
  for (long den = 1; den <= 6; ++den)
    for (long na = 0; na <= 2; ++na)
      for (long nb = 0; nb <= 2; ++nb) {
        if (na == 0 && nb == 0) continue;
        Rat norm(na * na + nb * nb, den * den);
        norm.canonicalize();
        Scalar value(Rat(na, den), Rat(nb, den));
        for (std::size_t j1 = 0; j1 < k; ++j1) {
          Rat residue = t - d[j1] * norm;
          if (sgn(residue) == 0) continue;
          for (std::size_t j0 = 0; j0 < k; ++j0) {
            if (j0 == j1) continue;
            v.assign(k, Scalar(0));
            v[j1] = value;
            if (closeWith(j0, residue)) return v;
          }
        }
      }
  for (int attempt = 0; attempt < 600; ++attempt) {
    long height = 1 + attempt / 60;
    v.assign(k, Scalar(0));
    std::size_t pivot = rng.below(k);
    std::size_t extras = 1 + rng.below(std::min<std::size_t>(k - 1, 2));
    for (std::size_t e = 0; e < extras; ++e) {
      std::size_t j = rng.below(k);
      if (j == pivot) continue;
      v[j] = Scalar(Rat(rng.intIn(-2 * height, 2 * height), rng.intIn(1, 1 + height)),
                    Rat(rng.intIn(-2 * height, 2 * height), rng.intIn(1, 1 + height)));
    }
    Rat used(0);
    for (std::size_t j = 0; j < k; ++j)
      if (j != pivot) used += d[j] * v[j].normSq();
    if (closeWith(pivot, t - used)) return v;
  }
  return std::nullopt;
}

// M with M^T H conj(M) = diag(targets); H an invertible hermitian form of
// the same signature as the targets.
std::optional<Matrix> solveForm(const Matrix& h, const std::vector<Rat>& targets,
                                Rng& rng) {
  std::size_t k = targets.size();
  if (k == 0) return Matrix(0, 0);
  auto dg = diagonalizeHermitian(h);
  auto vOpt = representValue(dg.diag, targets[0], rng);
  if (!vOpt) return std::nullopt;
  Matrix v(k, 1);
  for (std::size_t i = 0; i < k; ++i) v.at(i, 0) = (*vOpt)[i];
  v = dg.basis * v;  // back to the H frame
  std::size_t pivot = 0;
  while (pivot < k && v.at(pivot, 0).isZero()) ++pivot;
  // complement of v: w_j = e_j - (<e_j, v>/t) v for j != pivot
  auto formAt = [&](const Matrix& a, const Matrix& b) {
    Scalar acc(0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        acc += a.at(i, 0) * h.at(i, j) * conj(b.at(j, 0));
    return acc;
  };
  Matrix w(k, k - 1);
  std::size_t col = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == pivot) continue;
    Matrix ej(k, 1);
    ej.at(j, 0) = Scalar(1);
    Scalar coeff = formAt(ej, v) / Scalar(targets[0]);
    for (std::size_t i = 0; i < k; ++i)
      w.at(i, col) = ej.at(i, 0) - coeff * v.at(i, 0);
    ++col;
  }
  // <w_a, w_b> = w_a^T H conj(w_b)
  Matrix subGram(k - 1, k - 1);
  for (std::size_t a = 0; a < k - 1; ++a)
    for (std::size_t b = 0; b < k - 1; ++b) {
      Scalar acc(0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          acc += w.at(i, a) * h.at(i, j) * conj(w.at(j, b));
      subGram.at(a, b) = acc;
    }
  std::vector<Rat> rest(targets.begin() + 1, targets.end());
  auto tail = solveForm(subGram, rest, rng);
  if (!tail) return std::nullopt;
  Matrix wTail = w * *tail;
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    out.at(i, 0) = v.at(i, 0);
    for (std::size_t j = 1; j < k; ++j) out.at(i, j) = wTail.at(i, j - 1);
  }
  return out;
}

// phi with phi^T H1 conj(phi) = H2 for hermitian invertible H1, H2.
std::optional<Matrix> solveHermBlock(const Matrix& h1, const Matrix& h2, Rng& rng) {
  std::size_t n = h1.rows();
  if (n == 0) return Matrix(0, 0);
  auto d1 = diagonalizeHermitian(h1);
  auto d2 = diagonalizeHermitian(h2);
  auto [pos1, neg1] = countSigns(d1.diag);
  auto [pos2, neg2] = countSigns(d2.diag);
  if (pos1 != pos2 || neg1 != neg2) return std::nullopt;

  Matrix diag1(n, n);
  for (std::size_t a = 0; a < n; ++a) diag1.at(a, a) = Scalar(d1.diag[a]);
  auto psi = solveForm(diag1, d2.diag, rng);
  if (!psi)
    throw std::runtime_error(
        "solveCongruence: signatures match but no rational witness was found");
  Matrix phi = d1.basis * *psi * d2.basis.inverse();
  if (phi.transpose() * h1 * phi.conjugate() != h2)
    throw std::logic_error("solveHermBlock internal check failed");
  return phi;
}

}  // namespace

std::optional<EvenMap> solveCongruence(const Pairing& a, const Pairing& b) {
  if (a.conv != b.conv) throw ConventionMismatch("solveCongruence");
  if (a.space != b.space) return std::nullopt;
  SuperDims d = a.space;
  Rng rng(fnv("congruence") ^ fnv(to_string(a.gram.at(0, 0))) ^
          (fnv(to_string(b.gram.at(0, 0))) << 1) ^ (d.p * 131 + d.q));
  Matrix g(d.total(), d.total());
  if (d.p > 0) {
    auto even = solveHermBlock(block(a.gram, 0, d.p), block(b.gram, 0, d.p), rng);
    if (!even) return std::nullopt;
    for (std::size_t i = 0; i < d.p; ++i)
      for (std::size_t j = 0; j < d.p; ++j) g.at(i, j) = even->at(i, j);
  }
  if (d.q > 0) {
    Matrix oa = block(a.gram, d.p, d.total());
    Matrix ob = block(b.gram, d.p, d.total());
    if (a.conv == Convention::SUPER) {
      Scalar minusI(Rat(0), Rat(-1));
      oa = minusI * oa;
      ob = minusI * ob;
    }
    auto odd = solveHermBlock(oa, ob, rng);
    if (!odd) return std::nullopt;
    for (std::size_t i = 0; i < d.q; ++i)
      for (std::size_t j = 0; j < d.q; ++j) g.at(d.p + i, d.p + j) = odd->at(i, j);
  }
  EvenMap result(d, d, std::move(g));
  if (transfer(a, result).gram != b.gram)
    throw std::logic_error("solveCongruence internal check failed");
  return result;
}

}  // namespace dk
