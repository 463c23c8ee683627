#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rpk/digraph.hpp"

namespace rpk {

/// A digraph together with display names for its vertices.
struct Instance {
  ArcColouredDigraph graph;
  std::vector<std::string> names;
};

/// QT4, CB5, TB4 (one colour per arc, in pattern arc order) and FIG4, the
/// 2-coloured bipartite tournament on x1, x2, y1, y2, y3 without RP-kernel.
/// Throws Error(UnknownFixture).
Instance fixture(std::string_view name);

/// Names accepted by fixture().
std::vector<std::string> fixture_names();

enum class GenClass { Unicyclic, Semicomplete, QuasiTransitive, Bipartite };
enum class ColourStrategy { Injective, RandomRepair };

std::optional<GenClass> parse_gen_class(std::string_view name);
std::string_view gen_class_name(GenClass c);

struct GenProfile {
  GenClass cls = GenClass::Semicomplete;
  int n = 6;       // all classes except bipartite
  int x_size = 2;  // bipartite parts
  int y_size = 3;
  ColourStrategy colours = ColourStrategy::Injective;
  int palette = 3;  // colours drawn from 1..palette before repair
  std::uint64_t seed = 1;
  double symmetric_probability = 0.3;
  double arc_density = 0.4;
};

/// A random member of the class whose colouring satisfies the matching
/// hypotheses; repairs recolour offending arcs with unused colours, so the
/// final colour count may exceed `palette`. Deterministic in the profile.
/// Throws Error(InvalidArgument) for sizes outside the class (unicyclic needs
/// n >= 2, bipartite needs both parts nonempty, total <= 64).
Instance generate(const GenProfile& profile);

// --- raw random digraphs for property tests -------------------------------

/// Each ordered pair carries an arc with probability `density`, colour
/// uniform in 1..m.
ArcColouredDigraph random_coloured_digraph(int n, int m, double density, std::mt19937_64& rng);

/// Arcs only from earlier to later positions of a random permutation.
Digraph random_acyclic_digraph(int n, double density, std::mt19937_64& rng);

/// Asymmetric arcs follow a random order; symmetric pairs are unrestricted.
Digraph random_kp_digraph(int n, double density, double symmetric_probability,
                          std::mt19937_64& rng);

}  // namespace rpk
