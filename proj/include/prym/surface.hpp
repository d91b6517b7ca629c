#pragma once

#include <prym/quadfield.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace prym {

struct SurfaceError : std::runtime_error {
  explicit SurfaceError(const std::string& m) : std::runtime_error(m) {}
};

struct Zero {
  std::string id;
  int order = 0;  // cone angle 2*pi*(order+1); order 0 marks a regular marked point
};

// A horizontal saddle connection.  `from` is the zero at its left end,
// `to` the zero at its right end; len > 0.
struct SaddleConn {
  std::string id;
  QF len;
  std::string from, to;
};

struct Cyl {
  std::string id;
  QF w, h, t;                     // width, height, twist normalized to [0, w)
  std::vector<std::string> bottom;  // saddle connections left to right
  std::vector<std::string> top;
};

struct PrymInv {
  std::map<std::string, std::string> zeros, cyls, scs;
};

// Optional record a constructor attaches to a surface: the canonical
// symplectic basis of H_1^- together with the order generator acting on it.
struct EigenformCert {
  std::string family;                 // "three-tori" | "h2" | "cover1" | "cover2"
  long w = 0, h = 0, t = 0, e = 0;    // defining integer quadruple
  std::array<std::array<long, 4>, 4> endo{};  // T, acting on column coordinates
  std::array<long, 2> form_blocks{1, 1};      // intersection form diag(c1*J, c2*J)
  std::vector<QF> re, im;             // absolute period row vectors (length 4)
  std::vector<std::string> basis;     // labels
  long quad_e = 0, quad_c = 0;        // T^2 = quad_e*T + quad_c*Id
};

struct CylSurface {
  Disc disc;
  std::map<std::string, Zero> zeros;
  std::map<std::string, Cyl> cyls;
  std::map<std::string, SaddleConn> scs;
  PrymInv inv;
  std::string tag;  // e.g. "Prym(2,2)odd", "H(2)", "E(0,0,0)"
  std::optional<EigenformCert> cert;

  const Cyl& cyl(const std::string& id) const {
    auto it = cyls.find(id);
    if (it == cyls.end()) throw SurfaceError("no cylinder " + id);
    return it->second;
  }
  const SaddleConn& sc(const std::string& id) const {
    auto it = scs.find(id);
    if (it == scs.end()) throw SurfaceError("no saddle connection " + id);
    return it->second;
  }
  const Zero& zero(const std::string& id) const {
    auto it = zeros.find(id);
    if (it == zeros.end()) throw SurfaceError("no zero " + id);
    return it->second;
  }
  QF qf(const Rat& r) const { return QF::rational(r, disc); }
  QF qz() const { return QF::rational(Rat(0), disc); }
};

// --- incidence helpers ----------------------------------------------------

struct Slot {
  std::string cyl;
  int index = -1;
};

// where each sc appears on a bottom word / on a top word (exactly once each)
struct Incidence {
  std::map<std::string, Slot> on_bottom, on_top;
};

inline Incidence incidence(const CylSurface& s) {
  Incidence inc;
  for (auto& [cid, c] : s.cyls) {
    for (int i = 0; i < static_cast<int>(c.bottom.size()); ++i) {
      if (!inc.on_bottom.emplace(c.bottom[i], Slot{cid, i}).second)
        throw SurfaceError("saddle connection " + c.bottom[i] + " on two bottoms");
    }
    for (int i = 0; i < static_cast<int>(c.top.size()); ++i) {
      if (!inc.on_top.emplace(c.top[i], Slot{cid, i}).second)
        throw SurfaceError("saddle connection " + c.top[i] + " on two tops");
    }
  }
  return inc;
}

// A corner of the flat structure: bottom corner (C,i) sits between
// bottom[i-1] and bottom[i] (the left end of bottom[i]); top corner (C,i)
// between top[i-1] and top[i].  Each corner is a pi-sector of some zero.
struct Corner {
  std::string cyl;
  bool top = false;
  int index = 0;
  auto key() const { return std::tie(cyl, top, index); }
  bool operator<(const Corner& o) const { return key() < o.key(); }
  bool operator==(const Corner& o) const { return key() == o.key(); }
};

inline int wrap(int i, int n) { return ((i % n) + n) % n; }

// zero sitting at a corner
inline const std::string& corner_zero(const CylSurface& s, const Corner& c) {
  const Cyl& cy = s.cyl(c.cyl);
  const auto& word = c.top ? cy.top : cy.bottom;
  return s.sc(word[c.index]).from;
}

// Counterclockwise walk around a zero: U-corner -> D-corner -> U-corner ...
// From a bottom corner (C,i), crossing the left-pointing ray along
// bottom[i-1] leads to the top corner just after that sc in its top word;
// crossing the right-pointing ray along top[j] leads back to a bottom corner.
inline Corner link_next(const CylSurface& s, const Incidence& inc, const Corner& c) {
  const Cyl& cy = s.cyl(c.cyl);
  if (!c.top) {
    int n = static_cast<int>(cy.bottom.size());
    const std::string& prev = cy.bottom[wrap(c.index - 1, n)];
    Slot sl = inc.on_top.at(prev);
    int m = static_cast<int>(s.cyl(sl.cyl).top.size());
    return Corner{sl.cyl, true, wrap(sl.index + 1, m)};
  }
  const std::string& nxt = cy.top[c.index];
  Slot sl = inc.on_bottom.at(nxt);
  return Corner{sl.cyl, false, sl.index};
}

// The full link of one zero, alternating U (bottom) and D (top) corners,
// starting from the given bottom corner.
inline std::vector<Corner> link_of(const CylSurface& s, const Incidence& inc, Corner start) {
  std::vector<Corner> walk;
  Corner c = start;
  do {
    walk.push_back(c);
    c = link_next(s, inc, c);
  } while (!(c == start) && walk.size() <= 4 * s.scs.size() + 8);
  if (!(c == start)) throw SurfaceError("link walk does not close");
  return walk;
}

// Ray structure at a zero, paper style: U-corners u_0..u_{n-1} in ccw
// order; sigma_j = the saddle connection starting (left end) at u_j;
// pi(j) = m where sigma_j's right end sits at u_m (i.e. ends on the
// left-pointing ray of link index m).
struct ZeroLink {
  std::vector<Corner> u, d;              // alternating, u[i] then d[i]
  std::vector<std::string> sigma;        // sc starting at u[j]
  std::vector<int> pi;                   // sigma[j] ends at L_{pi[j]}
};

inline std::map<std::string, ZeroLink> zero_links(const CylSurface& s, const Incidence& inc) {
  std::map<std::string, ZeroLink> out;
  std::set<Corner> seen;
  for (auto& [cid, c] : s.cyls) {
    for (int i = 0; i < static_cast<int>(c.bottom.size()); ++i) {
      Corner start{cid, false, i};
      if (seen.count(start)) continue;
      auto walk = link_of(s, inc, start);
      ZeroLink zl;
      for (auto& w : walk) {
        seen.insert(w);
        if (w.top) zl.d.push_back(w);
        else zl.u.push_back(w);
      }
      if (zl.u.size() != zl.d.size() || walk.empty() || walk.front().top)
        throw SurfaceError("malformed link at zero");
      int n = static_cast<int>(zl.u.size());
      for (int j = 0; j < n; ++j)
        zl.sigma.push_back(s.cyl(zl.u[j].cyl).bottom[zl.u[j].index]);
      zl.pi.assign(n, -1);
      // sigma_j ends at the corner whose "previous bottom sc" is sigma_j
      for (int m = 0; m < n; ++m) {
        const Cyl& cy = s.cyl(zl.u[m].cyl);
        int sz = static_cast<int>(cy.bottom.size());
        const std::string& ending = cy.bottom[wrap(zl.u[m].index - 1, sz)];
        for (int j = 0; j < n; ++j)
          if (zl.sigma[j] == ending) zl.pi[j] = m;
      }
      const std::string& zid = corner_zero(s, start);
      out.emplace(zid, std::move(zl));
    }
  }
  return out;
}

// --- basic quantities -------------------------------------------------------

inline QF area(const CylSurface& s) {
  QF a = s.qz();
  for (auto& [id, c] : s.cyls) a += c.w * c.h;
  return a;
}

inline int derived_genus(const CylSurface& s) {
  // each sc appears once on a bottom; #U-corners at z is order(z)+1
  long total = 0;
  for (auto& [id, z] : s.zeros) total += z.order;
  if (total % 2 != 0) throw SurfaceError("odd total cone order");
  return static_cast<int>(total / 2 + 1);
}

inline bool classify_stability(const CylSurface& s) {  // true = stable
  for (auto& [id, sc] : s.scs)
    if (sc.from != sc.to) return false;
  return true;
}

// distinguished-zero convention: zeros fixed by tau weigh 0; in each
// 2-orbit the lexicographically smaller id weighs -1/2, the other +1/2.
inline Rat zero_weight(const CylSurface& s, const std::string& zid) {
  const std::string& img = s.inv.zeros.at(zid);
  if (img == zid) return Rat(0);
  return zid < img ? rat(-1, 2) : rat(1, 2);
}

inline std::string boundary_zero(const CylSurface& s, const std::vector<std::string>& word) {
  std::string z = s.sc(word.at(0)).from;
  for (auto& e : word) {
    if (s.sc(e).from != z || s.sc(e).to != z)
      throw SurfaceError("boundary carries more than one zero (unstable)");
  }
  return z;
}

// twist/height drift coefficient of a cylinder under the kernel foliation
inline Rat alpha_of(const CylSurface& s, const Cyl& c) {
  std::string zb = boundary_zero(s, c.bottom);
  std::string zt = boundary_zero(s, c.top);
  return zero_weight(s, zt) - zero_weight(s, zb);
}

inline std::map<std::string, Rat> alpha_coefficients(const CylSurface& s) {
  if (!classify_stability(s)) throw SurfaceError("alpha undefined: decomposition unstable");
  std::map<std::string, Rat> out;
  for (auto& [id, c] : s.cyls) out.emplace(id, alpha_of(s, c));
  return out;
}

struct Orbit {
  std::string rep;   // smallest cylinder id in the tau-orbit
  int beta = 1;      // 1 = fixed cylinder, 2 = swapped pair
};

inline std::vector<Orbit> involution_orbits(const CylSurface& s) {
  std::vector<Orbit> out;
  std::set<std::string> seen;
  for (auto& [id, c] : s.cyls) {
    if (seen.count(id)) continue;
    const std::string& img = s.inv.cyls.at(id);
    seen.insert(id);
    seen.insert(img);
    out.push_back(Orbit{std::min(id, img), img == id ? 1 : 2});
  }
  return out;
}

// --- exact positions --------------------------------------------------------

inline std::vector<QF> word_positions(const CylSurface& s, const std::vector<std::string>& word,
                                      QF start) {
  std::vector<QF> pos;
  QF p = start;
  for (auto& e : word) {
    pos.push_back(p);
    p += s.sc(e).len;
  }
  return pos;
}

inline std::vector<QF> bottom_positions(const CylSurface& s, const Cyl& c) {
  return word_positions(s, c.bottom, s.qz());
}
inline std::vector<QF> top_positions(const CylSurface& s, const Cyl& c) {
  return word_positions(s, c.top, c.t);  // may exceed w; callers reduce mod w
}

// --- validation --------------------------------------------------------------

inline int prym_fixed_point_count(const CylSurface& s);

inline std::vector<std::string> validate(const CylSurface& s) {
  std::vector<std::string> bad;
  auto note = [&](const std::string& m) { bad.push_back(m); };
  if (s.cyls.empty()) {
    note("no cylinders");
    return bad;
  }
  for (auto& [id, sc] : s.scs) {
    if (!sc.len.is_positive()) note("saddle connection " + id + " has non-positive length");
    if (!s.zeros.count(sc.from) || !s.zeros.count(sc.to))
      note("saddle connection " + id + " references unknown zero");
  }
  Incidence inc;
  try {
    inc = incidence(s);
  } catch (const SurfaceError& e) {
    note(e.what());
    return bad;
  }
  for (auto& [id, sc] : s.scs) {
    if (!inc.on_bottom.count(id)) note("saddle connection " + id + " missing from bottoms");
    if (!inc.on_top.count(id)) note("saddle connection " + id + " missing from tops");
  }
  if (!bad.empty()) return bad;

  for (auto& [id, c] : s.cyls) {
    if (!c.w.is_positive()) note("cylinder " + id + " has non-positive width");
    if (!c.h.is_positive()) note("cylinder " + id + " has non-positive height");
    if (c.t.is_negative() || !(c.t < c.w)) note("cylinder " + id + " twist not in [0,w)");
    if (c.bottom.empty() || c.top.empty()) {
      note("cylinder " + id + " has an empty boundary word");
      continue;
    }
    QF sb = s.qz(), st = s.qz();
    for (auto& e : c.bottom) sb += s.sc(e).len;
    for (auto& e : c.top) st += s.sc(e).len;
    if (sb != c.w) note("cylinder " + id + " boundary sum mismatch (bottom)");
    if (st != c.w) note("cylinder " + id + " boundary sum mismatch (top)");
    auto chain = [&](const std::vector<std::string>& word, const char* side) {
      int n = static_cast<int>(word.size());
      for (int i = 0; i < n; ++i) {
        if (s.sc(word[wrap(i - 1, n)]).to != s.sc(word[i]).from)
          note("cylinder " + id + " " + side + " word breaks zero chain at " + word[i]);
      }
    };
    chain(c.bottom, "bottom");
    chain(c.top, "top");
  }
  if (!bad.empty()) return bad;

  // cone angles from the link walk
  bool triple_tori = s.tag == "E(0,0,0)";
  try {
    auto links = zero_links(s, inc);
    std::map<std::string, int> ucount;
    for (auto& [zid, zl] : links) {
      if (ucount.count(zid)) note("zero " + zid + " appears in two separate links");
      ucount[zid] = static_cast<int>(zl.u.size());
    }
    for (auto& [zid, z] : s.zeros) {
      auto it = ucount.find(zid);
      if (it == ucount.end()) note("zero " + zid + " never occurs on a boundary");
      else if (!triple_tori && it->second != z.order + 1)
        note("zero " + zid + " cone angle mismatch: diagram gives order " +
             std::to_string(it->second - 1));
    }
  } catch (const SurfaceError& e) {
    note(e.what());
  }

  // connectivity of the gluing graph
  {
    std::map<std::string, int> comp;
    int nc = 0;
    for (auto& [id, c] : s.cyls) comp[id] = -1;
    std::vector<std::string> stack;
    for (auto& [id, c] : s.cyls) {
      if (comp[id] != -1) continue;
      comp[id] = nc;
      stack.push_back(id);
      while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (auto& e : s.cyl(cur).top) {
          std::string nb = inc.on_bottom.at(e).cyl;
          if (comp[nb] == -1) { comp[nb] = nc; stack.push_back(nb); }
        }
        for (auto& e : s.cyl(cur).bottom) {
          std::string nb = inc.on_top.at(e).cyl;
          if (comp[nb] == -1) { comp[nb] = nc; stack.push_back(nb); }
        }
      }
      ++nc;
    }
    if (triple_tori) {
      if (nc != 3) note("E(0,0,0) object must have exactly three torus components");
    } else if (nc != 1) {
      note("gluing graph is not connected");
    }
  }
  if (!area(s).is_positive()) note("total area not positive");

  // involution structure
  auto check_perm = [&](const std::map<std::string, std::string>& p, auto& domain,
                        const char* what) {
    if (p.size() != domain.size()) {
      note(std::string("involution ") + what + " permutation has wrong size");
      return false;
    }
    for (auto& [k, v] : p) {
      if (!domain.count(k) || !domain.count(v)) {
        note(std::string("involution ") + what + " references unknown id");
        return false;
      }
      if (p.at(v) != k) {
        note(std::string("involution ") + what + " is not an involution at " + k);
        return false;
      }
    }
    return true;
  };
  bool ok = check_perm(s.inv.zeros, s.zeros, "zero") && check_perm(s.inv.cyls, s.cyls, "cyl") &&
            check_perm(s.inv.scs, s.scs, "sc");
  if (!ok) return bad;
  for (auto& [zid, img] : s.inv.zeros)
    if (s.zero(zid).order != s.zero(img).order) note("involution changes cone order of " + zid);
  for (auto& [sid, img] : s.inv.scs) {
    if (s.sc(sid).len != s.sc(img).len) note("involution changes length of " + sid);
    if (s.inv.zeros.at(s.sc(sid).from) != s.sc(img).to ||
        s.inv.zeros.at(s.sc(sid).to) != s.sc(img).from)
      note("involution breaks endpoint pairing of " + sid);
  }
  for (auto& [cid, img] : s.inv.cyls) {
    const Cyl& c = s.cyl(cid);
    const Cyl& ic = s.cyl(img);
    if (c.w != ic.w || c.h != ic.h) {
      note("involution changes metric of cylinder " + cid);
      continue;
    }
    // image cylinder: bottom = reversed image of top, top = reversed image of bottom
    auto rev_img = [&](const std::vector<std::string>& word) {
      std::vector<std::string> out;
      for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(s.inv.scs.at(*it));
      return out;
    };
    auto cyclic_eq = [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
      if (a.size() != b.size()) return false;
      int n = static_cast<int>(a.size());
      for (int r = 0; r < n; ++r) {
        bool okr = true;
        for (int i = 0; i < n && okr; ++i) okr = a[i] == b[wrap(i + r, n)];
        if (okr) return true;
      }
      return false;
    };
    if (!cyclic_eq(ic.bottom, rev_img(c.top)))
      note("involution image of " + cid + " has wrong bottom word");
    if (!cyclic_eq(ic.top, rev_img(c.bottom)))
      note("involution image of " + cid + " has wrong top word");
  }
  if (!bad.empty()) return bad;

  // positional consistency: on each cylinder the involution must be realized
  // by (x, y) -> (off - x, h - y) for a single offset, matching both words
  for (auto& [cid, img] : s.inv.cyls) {
    const Cyl& c = s.cyl(cid);
    const Cyl& ic = s.cyl(img);
    auto bp = bottom_positions(s, c);
    auto itp = top_positions(s, ic);
    // bottom sc c.bottom[i] spans [bp[i], bp[i]+len]; its image must span
    // [off - bp[i] - len, off - bp[i]] on the top of ic for one offset off.
    int n = static_cast<int>(c.bottom.size());
    std::optional<QF> off;
    bool fail = false;
    for (int i = 0; i < n && !fail; ++i) {
      const std::string& img_sc = s.inv.scs.at(c.bottom[i]);
      // find img_sc on top of ic
      int j = -1;
      for (int k = 0; k < static_cast<int>(ic.top.size()); ++k)
        if (ic.top[k] == img_sc) j = k;
      if (j < 0) { fail = true; break; }
      QF cand = bp[i] + s.sc(c.bottom[i]).len + itp[j];
      if (!off) {
        off = cand.mod(c.w);
      } else if ((cand - *off).mod(c.w) != s.qz()) {
        fail = true;
      }
    }
    if (fail) note("involution not position-consistent on cylinder " + cid);
  }
  return bad;
}

inline bool is_valid(const CylSurface& s) { return validate(s).empty(); }

inline void require_valid(const CylSurface& s, const std::string& ctx) {
  auto bad = validate(s);
  if (!bad.empty()) {
    std::string msg = ctx + ": invalid surface:";
    for (auto& b : bad) msg += "\n  " + b;
    throw SurfaceError(msg);
  }
}

// fixed points of the involution, counted from the diagram: fixed zeros,
// midpoints of invariant saddle connections, and two interior points on
// each invariant cylinder.
inline int prym_fixed_point_count(const CylSurface& s) {
  int n = 0;
  for (auto& [zid, img] : s.inv.zeros)
    if (zid == img) ++n;
  for (auto& [sid, img] : s.inv.scs)
    if (sid == img) ++n;
  for (auto& [cid, img] : s.inv.cyls)
    if (cid == img) n += 2;
  return n;
}

// dim H_1(X,Z)^- from Lefschetz: (2g - 2 + #Fix)/2
inline int prym_minus_rank(const CylSurface& s) {
  int g = derived_genus(s);
  return (2 * g - 2 + prym_fixed_point_count(s)) / 2;
}

}  // namespace prym
