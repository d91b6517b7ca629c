#pragma once

#include <prym/surface.hpp>

namespace prym::fixtures {

// unit square torus with one marked point
inline CylSurface square_torus(long D = 5) {
  CylSurface s;
  s.disc = Disc(D);
  s.tag = "H(0)";
  s.zeros["O"] = Zero{"O", 0};
  s.scs["s0"] = SaddleConn{"s0", s.qf(Rat(1)), "O", "O"};
  Cyl c;
  c.id = "c0";
  c.w = s.qf(Rat(1));
  c.h = s.qf(Rat(1));
  c.t = s.qz();
  c.bottom = {"s0"};
  c.top = {"s0"};
  s.cyls["c0"] = c;
  s.inv.zeros["O"] = "O";
  s.inv.cyls["c0"] = "c0";
  s.inv.scs["s0"] = "s0";
  return s;
}

// Five-cylinder stable model in Prym(1,1,2): a square C2 fixed by tau,
// two swapped strip pairs (C3, C3') and (C1, C1').  Zeros: Q fixed of
// order 2, P1 and P2 swapped of order 1.
inline CylSurface prym112_five_cylinders(long D = 5) {
  CylSurface s;
  s.disc = Disc(D);
  s.tag = "Prym(1,1,2)";
  auto q = [&](long n, long d = 1) { return s.qf(rat(n, d)); };
  s.zeros["Q"] = Zero{"Q", 2};
  s.zeros["P1"] = Zero{"P1", 1};
  s.zeros["P2"] = Zero{"P2", 1};
  auto sc = [&](const std::string& id, Rat len, const std::string& z) {
    s.scs[id] = SaddleConn{id, s.qf(len), z, z};
  };
  sc("e1", Rat(1), "Q");
  sc("e2", Rat(2), "Q");
  sc("e6", Rat(1), "Q");
  sc("e3", rat(3, 2), "P2");
  sc("e4", rat(3, 2), "P2");
  sc("e5", rat(3, 2), "P1");
  sc("e4p", rat(3, 2), "P1");
  auto cyl = [&](const std::string& id, Rat w, Rat h, Rat t, std::vector<std::string> b,
                 std::vector<std::string> tp) {
    Cyl c;
    c.id = id;
    c.w = s.qf(w);
    c.h = s.qf(h);
    c.t = s.qf(t);
    c.bottom = std::move(b);
    c.top = std::move(tp);
    s.cyls[id] = c;
  };
  cyl("c2", Rat(1), Rat(1), Rat(0), {"e6"}, {"e1"});
  cyl("c3", Rat(3), Rat(1), rat(1, 4), {"e1", "e2"}, {"e3", "e4"});
  cyl("c3p", Rat(3), Rat(1), rat(3, 4), {"e4p", "e5"}, {"e2", "e6"});
  cyl("c1", rat(3, 2), rat(1, 2), rat(1, 2), {"e4"}, {"e5"});
  cyl("c1p", rat(3, 2), rat(1, 2), rat(1, 2), {"e3"}, {"e4p"});
  s.inv.zeros = {{"Q", "Q"}, {"P1", "P2"}, {"P2", "P1"}};
  s.inv.cyls = {{"c2", "c2"}, {"c3", "c3p"}, {"c3p", "c3"}, {"c1", "c1p"}, {"c1p", "c1"}};
  s.inv.scs = {{"e1", "e6"}, {"e6", "e1"}, {"e2", "e2"}, {"e3", "e5"},
               {"e5", "e3"}, {"e4", "e4p"}, {"e4p", "e4"}};
  return s;
}

}  // namespace prym::fixtures
