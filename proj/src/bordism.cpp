#include "daggerkit/bordism.hpp"

#include <algorithm>

namespace dk {

namespace {

// src PT and tgt DUAL_PT are incoming (-), src DUAL_PT and tgt PT outgoing (+)
int polarity(const BordMorphism& m, const Endpoint& e) {
  Slot s = e.tgt ? m.tgt[e.index] : m.src[e.index];
  bool plus = e.tgt == (s == Slot::PT);
  return plus ? 1 : -1;
}

Strand makeStrand(Endpoint a, Endpoint b, bool flip) {
  if (b < a) std::swap(a, b);
  return Strand{a, b, flip};
}

void normalize(BordMorphism& m) { std::sort(m.strands.begin(), m.strands.end()); }

}  // namespace

BordObject parseObject(const std::string& word) {
  BordObject obj;
  for (char c : word) {
    if (c == 'p')
      obj.push_back(Slot::PT);
    else if (c == 'd')
      obj.push_back(Slot::DUAL_PT);
    else
      throw ObjectMismatch(std::string("bad object letter '") + c + "'");
  }
  return obj;
}

std::string objectWord(const BordObject& obj) {
  std::string w;
  for (Slot s : obj) w += s == Slot::PT ? 'p' : 'd';
  return w;
}

BordObject dualObject(const BordObject& y) {
  BordObject d;
  for (auto it = y.rbegin(); it != y.rend(); ++it)
    d.push_back(*it == Slot::PT ? Slot::DUAL_PT : Slot::PT);
  return d;
}

bool wellFormed(const BordMorphism& m) {
  std::size_t n = m.src.size() + m.tgt.size();
  if (m.strands.size() * 2 != n) return false;
  std::vector<int> seen(n, 0);
  auto slotId = [&](const Endpoint& e) { return (e.tgt ? m.src.size() : 0) + e.index; };
  for (const auto& s : m.strands) {
    if (s.a.index >= (s.a.tgt ? m.tgt.size() : m.src.size())) return false;
    if (s.b.index >= (s.b.tgt ? m.tgt.size() : m.src.size())) return false;
    ++seen[slotId(s.a)];
    ++seen[slotId(s.b)];
    if (polarity(m, s.a) + polarity(m, s.b) != 0) return false;
    if (m.flavor == Flavor::ORIENTED && s.flip) return false;
  }
  if (m.flavor == Flavor::ORIENTED && m.nAntiperiodic != 0) return false;
  for (int c : seen)
    if (c != 1) return false;
  return true;
}

BordMorphism identityBord(const BordObject& obj, Flavor flavor) {
  BordMorphism m{flavor, obj, obj, {}, 0, 0};
  for (std::size_t i = 0; i < obj.size(); ++i)
    m.strands.push_back(makeStrand({false, i}, {true, i}, false));
  return m;
}

BordMorphism generator(GeneratorKind kind, Flavor flavor) {
  switch (kind) {
    case GeneratorKind::ID:
      return identityBord({Slot::PT}, flavor);
    case GeneratorKind::THETA: {
      if (flavor == Flavor::ORIENTED) throw ThetaNotInOriented();
      BordMorphism m = identityBord({Slot::PT}, flavor);
      m.strands[0].flip = true;
      return m;
    }
    case GeneratorKind::EV: {
      BordMorphism m{flavor, {Slot::DUAL_PT, Slot::PT}, {}, {}, 0, 0};
      m.strands.push_back(makeStrand({false, 0}, {false, 1}, false));
      return m;
    }
    case GeneratorKind::COEV: {
      BordMorphism m{flavor, {}, {Slot::PT, Slot::DUAL_PT}, {}, 0, 0};
      m.strands.push_back(makeStrand({true, 0}, {true, 1}, false));
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

BordMorphism braidNF(const BordObject& a, const BordObject& b, Flavor flavor) {
  BordObject src = a, tgt = b;
  src.insert(src.end(), b.begin(), b.end());
  tgt.insert(tgt.end(), a.begin(), a.end());
  BordMorphism m{flavor, src, tgt, {}, 0, 0};
  for (std::size_t i = 0; i < a.size(); ++i)
    m.strands.push_back(makeStrand({false, i}, {true, b.size() + i}, false));
  for (std::size_t j = 0; j < b.size(); ++j)
    m.strands.push_back(makeStrand({false, a.size() + j}, {true, j}, false));
  normalize(m);
  return m;
}

BordMorphism flipAction(const BordObject& y, Flavor flavor) {
  if (flavor == Flavor::ORIENTED) throw ThetaNotInOriented();
  BordMorphism m = identityBord(y, flavor);
  for (auto& s : m.strands) s.flip = true;
  return m;
}

BordMorphism wordEv(const BordObject& y, Flavor flavor) {
  BordObject src = dualObject(y);
  src.insert(src.end(), y.begin(), y.end());
  BordMorphism m{flavor, src, {}, {}, 0, 0};
  std::size_t n = y.size();
  for (std::size_t k = 0; k < n; ++k)
    m.strands.push_back(makeStrand({false, k}, {false, 2 * n - 1 - k}, false));
  normalize(m);
  return m;
}

BordMorphism wordCoev(const BordObject& y, Flavor flavor) {
  BordObject tgt = y;
  BordObject d = dualObject(y);
  tgt.insert(tgt.end(), d.begin(), d.end());
  BordMorphism m{flavor, {}, tgt, {}, 0, 0};
  std::size_t n = y.size();
  for (std::size_t k = 0; k < n; ++k)
    m.strands.push_back(makeStrand({true, k}, {true, 2 * n - 1 - k}, false));
  normalize(m);
  return m;
}

BordMorphism compose(const BordMorphism& g, const BordMorphism& f) {
  if (f.flavor != g.flavor) throw ObjectMismatch("composing bordisms of different flavors");
  if (f.tgt != g.src)
    throw ObjectMismatch("compose: boundary words " + objectWord(f.tgt) + " vs " +
                         objectWord(g.src));
  // node ids: f.src slot i -> i; glue slot k -> S+k; g.tgt slot j -> S+G+j
  std::size_t S = f.src.size(), G = f.tgt.size(), T = g.tgt.size();
  struct Edge {
    std::size_t u, v;
    bool flip;
  };
  std::vector<Edge> edges;
  for (const auto& s : f.strands) {
    auto node = [&](const Endpoint& e) { return e.tgt ? S + e.index : e.index; };
    edges.push_back({node(s.a), node(s.b), s.flip});
  }
  for (const auto& s : g.strands) {
    auto node = [&](const Endpoint& e) { return e.tgt ? S + G + e.index : S + e.index; };
    edges.push_back({node(s.a), node(s.b), s.flip});
  }
  std::vector<std::vector<std::size_t>> incident(S + G + T);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }
  std::vector<bool> used(edges.size(), false);
  BordMorphism out{f.flavor, f.src, g.tgt, {},
                   f.nPeriodic + g.nPeriodic, f.nAntiperiodic + g.nAntiperiodic};
  auto isFree = [&](std::size_t node) { return node < S || node >= S + G; };
  auto toEndpoint = [&](std::size_t node) {
    return node < S ? Endpoint{false, node} : Endpoint{true, node - S - G};
  };
  for (std::size_t start = 0; start < S + G + T; ++start) {
    if (!isFree(start) || incident[start].empty()) continue;
    std::size_t e = incident[start][0];
    if (used[e]) continue;
    bool flip = false;
    std::size_t node = start;
    while (true) {
      used[e] = true;
      flip ^= edges[e].flip;
      node = edges[e].u == node ? edges[e].v : edges[e].u;
      if (isFree(node)) break;
      e = incident[node][0] == e ? incident[node][1] : incident[node][0];
    }
    out.strands.push_back(makeStrand(toEndpoint(start), toEndpoint(node), flip));
  }
  for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (used[e0]) continue;
    bool flip = false;
    std::size_t e = e0, node = edges[e0].u;
    do {
      used[e] = true;
      flip ^= edges[e].flip;
      node = edges[e].u == node ? edges[e].v : edges[e].u;
      e = incident[node][0] == e ? incident[node][1] : incident[node][0];
    } while (e != e0 || node != edges[e0].u);
    if (flip)
      ++out.nAntiperiodic;
    else
      ++out.nPeriodic;
  }
  normalize(out);
  return out;
}

BordMorphism tensorBord(const BordMorphism& f, const BordMorphism& g) {
  if (f.flavor != g.flavor) throw ObjectMismatch("tensoring bordisms of different flavors");
  BordMorphism out{f.flavor, f.src, f.tgt, f.strands,
                   f.nPeriodic + g.nPeriodic, f.nAntiperiodic + g.nAntiperiodic};
  out.src.insert(out.src.end(), g.src.begin(), g.src.end());
  out.tgt.insert(out.tgt.end(), g.tgt.begin(), g.tgt.end());
  for (auto s : g.strands) {
    s.a.index += s.a.tgt ? f.tgt.size() : f.src.size();
    s.b.index += s.b.tgt ? f.tgt.size() : f.src.size();
    out.strands.push_back(s);
  }
  normalize(out);
  return out;
}

BordMorphism daggerBord(const BordMorphism& f) {
  BordMorphism out{f.flavor, f.tgt, f.src, {}, f.nPeriodic, f.nAntiperiodic};
  for (auto s : f.strands) {
    bool turnBack = s.a.tgt == s.b.tgt;
    s.a.tgt = !s.a.tgt;
    s.b.tgt = !s.b.tgt;
    if (turnBack && f.flavor == Flavor::SPIN) s.flip = !s.flip;
    out.strands.push_back(makeStrand(s.a, s.b, s.flip));
  }
  normalize(out);
  return out;
}

BordMorphism factorMorphism(const Factor& f, Flavor flavor) {
  switch (f.kind) {
    case Factor::Kind::SWAP_ADJ: {
      BordObject tgt = f.word;
      std::swap(tgt[f.pos], tgt[f.pos + 1]);
      BordMorphism m{flavor, f.word, tgt, {}, 0, 0};
      for (std::size_t i = 0; i < f.word.size(); ++i) {
        std::size_t j = i == f.pos ? f.pos + 1 : (i == f.pos + 1 ? f.pos : i);
        m.strands.push_back(makeStrand({false, i}, {true, j}, false));
      }
      normalize(m);
      return m;
    }
    case Factor::Kind::EV_AT: {
      if (f.word[f.pos] != Slot::DUAL_PT || f.word[f.pos + 1] != Slot::PT)
        throw ObjectMismatch("EV_AT expects a [d p] pair");
      BordObject tgt;
      for (std::size_t i = 0; i < f.word.size(); ++i)
        if (i != f.pos && i != f.pos + 1) tgt.push_back(f.word[i]);
      BordMorphism m{flavor, f.word, tgt, {}, 0, 0};
      m.strands.push_back(makeStrand({false, f.pos}, {false, f.pos + 1}, f.flip));
      for (std::size_t i = 0; i < f.word.size(); ++i) {
        if (i == f.pos || i == f.pos + 1) continue;
        std::size_t j = i < f.pos ? i : i - 2;
        m.strands.push_back(makeStrand({false, i}, {true, j}, false));
      }
      normalize(m);
      return m;
    }
    case Factor::Kind::COEV_AT: {
      BordObject tgt = f.word;
      tgt.insert(tgt.begin() + static_cast<std::ptrdiff_t>(f.pos),
                 {Slot::PT, Slot::DUAL_PT});
      BordMorphism m{flavor, f.word, tgt, {}, 0, 0};
      m.strands.push_back(makeStrand({true, f.pos}, {true, f.pos + 1}, f.flip));
      for (std::size_t i = 0; i < f.word.size(); ++i) {
        std::size_t j = i < f.pos ? i : i + 2;
        m.strands.push_back(makeStrand({false, i}, {true, j}, false));
      }
      normalize(m);
      return m;
    }
    case Factor::Kind::THETA_AT: {
      if (flavor == Flavor::ORIENTED) throw ThetaNotInOriented();
      BordMorphism m = identityBord(f.word, flavor);
      for (auto& s : m.strands)
        if (s.a.index == f.pos && !s.a.tgt) s.flip = true;
      normalize(m);
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Factor> factorize(const BordMorphism& m) {
  std::vector<Factor> factors;
  BordObject word = m.src;
  // track[i]: original src index at position i, or tgt index encoded as
  // tgtBase + j once cups are created
  const std::size_t tgtBase = 1u << 20;
  std::vector<std::size_t> track(word.size());
  for (std::size_t i = 0; i < track.size(); ++i) track[i] = i;

  auto posOf = [&](std::size_t label) {
    for (std::size_t i = 0; i < track.size(); ++i)
      if (track[i] == label) return i;
    throw std::logic_error("factorize lost a slot");
  };
  auto emitSwap = [&](std::size_t pos) {
    factors.push_back({Factor::Kind::SWAP_ADJ, word, pos, false});
    std::swap(word[pos], word[pos + 1]);
    std::swap(track[pos], track[pos + 1]);
  };
  auto moveTo = [&](std::size_t from, std::size_t to) {
    while (from > to) {
      emitSwap(from - 1);
      --from;
    }
    while (from < to) {
      emitSwap(from);
      ++from;
    }
  };

  std::vector<Strand> caps, cups, throughs;
  for (const auto& s : m.strands) {
    if (!s.a.tgt && !s.b.tgt)
      caps.push_back(s);
    else if (s.a.tgt && s.b.tgt)
      cups.push_back(s);
    else
      throughs.push_back(s);
  }

  for (const auto& cap : caps) {
    moveTo(posOf(cap.a.index), 0);
    moveTo(posOf(cap.b.index), 1);
    if (word[0] == Slot::PT) emitSwap(0);
    factors.push_back({Factor::Kind::EV_AT, word, 0, cap.flip});
    word.erase(word.begin(), word.begin() + 2);
    track.erase(track.begin(), track.begin() + 2);
  }

  for (const auto& t : throughs) {
    if (!t.flip) continue;
    std::size_t srcIdx = t.a.tgt ? t.b.index : t.a.index;
    factors.push_back({Factor::Kind::THETA_AT, word, posOf(srcIdx), false});
  }

  for (const auto& cup : cups) {
    // created pair is [p d]; route each leg to its tgt polarity
    std::size_t ptTgt = m.tgt[cup.a.index] == Slot::PT ? cup.a.index : cup.b.index;
    std::size_t dualTgt = ptTgt == cup.a.index ? cup.b.index : cup.a.index;
    factors.push_back({Factor::Kind::COEV_AT, word, word.size(), cup.flip});
    word.push_back(Slot::PT);
    word.push_back(Slot::DUAL_PT);
    track.push_back(tgtBase + ptTgt);
    track.push_back(tgtBase + dualTgt);
  }

  // final permutation: slot with label L must reach its target position
  std::vector<std::size_t> want(track.size());
  for (std::size_t i = 0; i < track.size(); ++i) {
    std::size_t label = track[i];
    if (label >= tgtBase) {
      want[i] = label - tgtBase;
    } else {
      for (const auto& t : throughs) {
        std::size_t srcIdx = t.a.tgt ? t.b.index : t.a.index;
        if (srcIdx == label) want[i] = t.a.tgt ? t.a.index : t.b.index;
      }
    }
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < want.size(); ++i) {
      if (want[i] > want[i + 1]) {
        emitSwap(i);
        std::swap(want[i], want[i + 1]);
        moved = true;
      }
    }
  }

  // defensive replay: the sliced layers must rebuild the matching exactly
  BordMorphism replay = identityBord(m.src, m.flavor);
  for (const auto& f : factors) replay = compose(factorMorphism(f, m.flavor), replay);
  BordMorphism expect = m;
  expect.nPeriodic = expect.nAntiperiodic = 0;
  if (!(replay == expect)) throw std::logic_error("factorize replay mismatch");
  return factors;
}

}  // namespace dk
