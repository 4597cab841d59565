#include "quatgeo/fixtures.hpp"

namespace quatgeo {

GeneratedGroup fixture_example() {
  using Q = Quat<Rat>;
  Q one{Rat(1)};
  Q i = Q::unit_i();
  Q j = Q::unit_j();

  auto g2 = [](Q b, Q r, Q d, Q s) {
    QMatrix<Rat> h = QMatrix<Rat>::identity(2);
    h.at(0, 1) = std::move(b);
    h.at(1, 1) = std::move(d);
    return ExactAffine{std::move(h), {std::move(r), std::move(s)}};
  };

  GeneratedGroup g;
  g.generators = {
      ExactAffine::translation({Q(), one}),        // A
      g2(-one, Q(), one, i),                       // B
      ExactAffine::translation({one, Q()}),        // C
      ExactAffine::translation({j, Q()}),          // D
      g2(Q(), Q(Rat(0), Rat(0), Rat(1, 2), Rat(0)), -one, i),  // S
  };
  g.labels = {"A", "B", "C", "D", "S"};
  return g;
}

}  // namespace quatgeo
