#ifndef TEMPSPAN_TRANSFORM_HPP
#define TEMPSPAN_TRANSFORM_HPP

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// Bi-clique image of a clique: side A is the vertex set, side B a copy of it
/// with the same indices. Cross pairs keep the clique label; the n diagonal
/// pairs (v, v') get the fresh label mu = 1 + max clique label, later than
/// everything else. A bi-spanner of the image yields a spanner of the clique
/// by dropping diagonal edges and collapsing the copies.
struct CliqueAsBiclique {
    TemporalBiClique image;
    Label mu = 0;
};

CliqueAsBiclique clique_to_biclique(const TemporalClique& c);

/// Collapses a bi-spanner of the duplicated image back onto the clique:
/// each non-diagonal edge (u, v') maps to the clique edge {u, v}; diagonal
/// edges are dropped. With strict set (default), s_d is first verified to be
/// a bi-spanner of the image.
Spanner bispanner_to_clique_spanner(const CliqueAsBiclique& t, const Spanner& s_d,
                                    bool strict = true);

/// Clique image of a square bi-clique on vertices [0, 2n): A keeps its
/// indices, B-vertex j becomes n + j. Cross pairs get 1 + label, pairs inside
/// B get 0 (earlier than everything), pairs inside A get mu = 2 + max label
/// (later than everything). A full spanner of the image restricted to cross
/// pairs is a bi-spanner of the input.
struct BicliqueAsClique {
    TemporalClique image;
    Index n = 0;
    Label mu = 0;
};

BicliqueAsClique biclique_to_clique(const TemporalBiClique& g);

/// Restriction of a spanner of the image to cross pairs, translated back to
/// bi-clique coordinates.
Spanner cross_filter(const BicliqueAsClique& t, const Spanner& s);

}

#endif
