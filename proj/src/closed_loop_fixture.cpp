#include "isorad/io.hpp"
#include "isorad/planar_map.hpp"

namespace isorad {

// Smallest bipartite map whose train-track graph has a closed track, as
// found by tools/find_closed_loop --bipartite (also in data/closed_loop_fixture.json):
// a vertex with two digons, one of them bounding the outer face.
CombMap closed_loop_fixture() {
    static const char* kData = R"({"edges":[{"endpoints":[0,1],"id":0},{"endpoints":[0,1],"id":1},{"endpoints":[0,2],"id":2},{"endpoints":[0,2],"id":3}],"outer_dart":{"edge":0,"end":0},"rotations":{"0":[{"edge":0,"end":0},{"edge":1,"end":0},{"edge":2,"end":0},{"edge":3,"end":0}],"1":[{"edge":0,"end":1},{"edge":1,"end":1}],"2":[{"edge":2,"end":1},{"edge":3,"end":1}]},"vertices":[{"color":"white","id":0},{"color":"black","id":1},{"color":"black","id":2}]})";
    return map_from_json(Json::parse(kData));
}

}  // namespace isorad
