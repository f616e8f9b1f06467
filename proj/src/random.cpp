#include "daggerkit/random.hpp"

#include <algorithm>

namespace dk {

Scalar randomScalar(Rng& rng, long height) {
  auto part = [&]() {
    if (rng.below(3) == 0) return Rat(0);
    Rat r(rng.intIn(-height, height), rng.intIn(1, 2));
    r.canonicalize();
    return r;
  };
  return Scalar(part(), part());
}

EvenMap randomEvenMap(Rng& rng, SuperDims dom, SuperDims cod, long height) {
  Matrix m(cod.total(), dom.total());
  for (std::size_t i = 0; i < cod.total(); ++i)
    for (std::size_t j = 0; j < dom.total(); ++j)
      if (cod.deg(i) == dom.deg(j)) m.at(i, j) = randomScalar(rng, height);
  return EvenMap(dom, cod, std::move(m));
}

namespace {

Scalar randomUnit(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return Scalar(1);
    case 1: return Scalar(-1);
    case 2: return Scalar(2);
    case 3: return Scalar(Rat(1, 2));
    case 4: return Scalar::i();
    default: return -Scalar::i();
  }
}

Matrix randomInvertibleBlock(Rng& rng, std::size_t k) {
  Matrix lower = Matrix::identity(k), upper = Matrix::identity(k), diag(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    diag.at(i, i) = randomUnit(rng);
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.coin()) lower.at(i, j) = randomScalar(rng, 1);
      if (rng.coin()) upper.at(j, i) = randomScalar(rng, 1);
    }
  }
  return lower * diag * upper;
}

}  // namespace

EvenMap randomInvertibleEven(Rng& rng, SuperDims dims) {
  Matrix m(dims.total(), dims.total());
  Matrix even = randomInvertibleBlock(rng, dims.p);
  Matrix odd = randomInvertibleBlock(rng, dims.q);
  for (std::size_t i = 0; i < dims.p; ++i)
    for (std::size_t j = 0; j < dims.p; ++j) m.at(i, j) = even.at(i, j);
  for (std::size_t i = 0; i < dims.q; ++i)
    for (std::size_t j = 0; j < dims.q; ++j) m.at(dims.p + i, dims.p + j) = odd.at(i, j);
  return EvenMap(dims, dims, std::move(m));
}

SignatureQuad randomClassSignature(Rng& rng, SuperDims dims, PositivityClass cls) {
  switch (cls) {
    case PositivityClass::SHILB:
      return {dims.p, 0, dims.q, 0};
    case PositivityClass::SHILB_ODD_NEG:
      return {dims.p, 0, 0, dims.q};
    case PositivityClass::SHERM: {
      std::size_t a = rng.below(dims.p + 1);
      std::size_t b = rng.below(dims.q + 1);
      return {a, dims.p - a, b, dims.q - b};
    }
  }
  throw std::logic_error("unreachable");
}

FramedPairing randomFramedPairing(Rng& rng, SuperDims dims, Convention conv,
                                  PositivityClass cls) {
  SignatureQuad sig = randomClassSignature(rng, dims, cls);
  Pairing rep = canonicalPairing(sig, conv);
  EvenMap frame = randomInvertibleEven(rng, dims);
  return {transfer(rep, frame), frame, sig};
}

Pairing randomPairing(Rng& rng, SuperDims dims, Convention conv, PositivityClass cls) {
  return randomFramedPairing(rng, dims, conv, cls).h;
}

namespace {

Scalar randomPhase(Rng& rng) {
  Scalar z(Rat(rng.intIn(1, 3)), Rat(rng.intIn(-2, 2)));
  return z / conj(z);
}

// groups of slots carrying the same canonical norm
std::vector<std::vector<std::size_t>> normGroups(const SignatureQuad& sig) {
  std::vector<std::vector<std::size_t>> groups(4);
  std::size_t slot = 0;
  for (std::size_t k = 0; k < sig.p1; ++k) groups[0].push_back(slot++);
  for (std::size_t k = 0; k < sig.p2; ++k) groups[1].push_back(slot++);
  for (std::size_t k = 0; k < sig.p3; ++k) groups[2].push_back(slot++);
  for (std::size_t k = 0; k < sig.p4; ++k) groups[3].push_back(slot++);
  return groups;
}

}  // namespace

EvenMap randomCanonicalUnitary(Rng& rng, const SignatureQuad& sig, Convention conv) {
  SuperDims dims{sig.p1 + sig.p2, sig.p3 + sig.p4};
  Matrix u = Matrix::identity(dims.total());
  auto groups = normGroups(sig);
  std::size_t rounds = 2 + rng.below(3);
  for (std::size_t r = 0; r < rounds; ++r) {
    for (const auto& group : groups) {
      if (group.empty()) continue;
      Matrix f = Matrix::identity(dims.total());
      if (group.size() >= 2 && rng.coin()) {
        std::size_t a = group[rng.below(group.size())];
        std::size_t b = a;
        while (b == a) b = group[rng.below(group.size())];
        // rational rotation: |x|^2 + |y|^2 = 1 from tau in Q(i)
        Scalar tau = randomScalar(rng, 1);
        Scalar t(tau.normSq());
        Scalar x = (Scalar(1) - t) / (Scalar(1) + t);
        Scalar y = (Scalar(2) * tau) / (Scalar(1) + t);
        f.at(a, a) = x;
        f.at(a, b) = -conj(y);
        f.at(b, a) = y;
        f.at(b, b) = conj(x);
      } else {
        std::size_t a = group[rng.below(group.size())];
        f.at(a, a) = randomPhase(rng);
      }
      u = u * f;
    }
  }
  (void)conv;
  return EvenMap(dims, dims, std::move(u));
}

EvenMap randomUnitary(Rng& rng, const FramedPairing& fp) {
  EvenMap u0 = randomCanonicalUnitary(rng, fp.sig, fp.h.conv);
  return compose(fp.frame.inverse(), compose(u0, fp.frame));
}

EvenMap randomUnitaryInvolution(Rng& rng, const FramedPairing& fp, bool forceParity) {
  SuperDims dims = fp.h.space;
  Matrix signs = Matrix::identity(dims.total());
  for (std::size_t k = 0; k < dims.total(); ++k) {
    bool minus = forceParity ? dims.odd(k) : rng.coin();
    if (minus) signs.at(k, k) = Scalar(-1);
  }
  Pairing rep = canonicalPairing(fp.sig, fp.h.conv);
  EvenMap u0 = randomCanonicalUnitary(rng, fp.sig, fp.h.conv);
  EvenMap theta0 = compose(u0, compose(EvenMap(dims, dims, signs), dagger(u0, rep, rep)));
  return compose(fp.frame.inverse(), compose(theta0, fp.frame));
}

EvenMap randomSelfAdjointAut(Rng& rng, const FramedPairing& fp) {
  SuperDims dims = fp.h.space;
  Matrix diag = Matrix::identity(dims.total());
  for (std::size_t k = 0; k < dims.total(); ++k) {
    Rat d(rng.intIn(1, 3), rng.intIn(1, 2));
    d.canonicalize();
    diag.at(k, k) = Scalar(rng.coin() ? d : -d);
  }
  Pairing rep = canonicalPairing(fp.sig, fp.h.conv);
  EvenMap u0 = randomCanonicalUnitary(rng, fp.sig, fp.h.conv);
  EvenMap a0 = compose(u0, compose(EvenMap(dims, dims, diag), dagger(u0, rep, rep)));
  return compose(fp.frame.inverse(), compose(a0, fp.frame));
}

BordObject randomWord(Rng& rng, std::size_t maxLen) {
  BordObject w;
  std::size_t len = rng.below(maxLen + 1);
  for (std::size_t k = 0; k < len; ++k)
    w.push_back(rng.coin() ? Slot::PT : Slot::DUAL_PT);
  return w;
}

BordMorphism randomBordism(Rng& rng, Flavor flavor, std::size_t maxLen) {
  auto plusCount = [](const BordObject& src, const BordObject& tgt) {
    long balance = 0;
    for (Slot s : src) balance += s == Slot::DUAL_PT ? 1 : -1;
    for (Slot s : tgt) balance += s == Slot::PT ? 1 : -1;
    return balance;
  };
  BordObject src, tgt;
  do {
    src = randomWord(rng, maxLen);
    tgt = randomWord(rng, maxLen);
  } while (plusCount(src, tgt) != 0);

  std::vector<Endpoint> plus, minus;
  for (std::size_t i = 0; i < src.size(); ++i)
    (src[i] == Slot::DUAL_PT ? plus : minus).push_back({false, i});
  for (std::size_t j = 0; j < tgt.size(); ++j)
    (tgt[j] == Slot::PT ? plus : minus).push_back({true, j});
  for (std::size_t k = plus.size(); k > 1; --k)
    std::swap(plus[k - 1], plus[rng.below(k)]);

  BordMorphism m{flavor, src, tgt, {}, rng.below(2), 0};
  if (flavor == Flavor::SPIN) m.nAntiperiodic = rng.below(2);
  for (std::size_t k = 0; k < plus.size(); ++k) {
    Endpoint a = plus[k], b = minus[k];
    if (b < a) std::swap(a, b);
    bool flip = flavor == Flavor::SPIN && rng.coin();
    m.strands.push_back({a, b, flip});
  }
  std::sort(m.strands.begin(), m.strands.end());
  return m;
}

}  // namespace dk
