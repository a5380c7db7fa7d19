#ifndef QUIVERLAB_FIXTURES_HPP
#define QUIVERLAB_FIXTURES_HPP

#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab::fixtures {

Quiver a2();      // v1 --e--> v2
Quiver line3();   // v1 -> v2 -> v3
Quiver conv3();   // v1 -> v2 <- v3
Quiver e();       // f: v->u, g: v->w, h: w->w (loop)
Quiver eprime();  // out-split of e at v
Quiver t();       // Toeplitz: loop c at u, f: u->v
Quiver rose2();   // two loops at one vertex
Quiver haz1();    // v1->v2->v3<-v4<-v5
Quiver haz2();    // v1->v2->v3, v4->v2, v5->v3

/// Partition of out-edges realizing eprime() as out_split(e(), ...).
OutSplitPartition eprime_partition();

std::vector<Quiver> all();

}  // namespace quiverlab::fixtures

#endif
