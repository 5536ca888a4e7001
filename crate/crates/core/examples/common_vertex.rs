//! Graphs on at most 2s - 1 vertices whose maximum cliques (of size s) all
//! share a vertex.

use partsat::oracles::common_vertices;
use partsat::PartiteGraph;

fn main() -> partsat::Result<()> {
    // two triangles glued at vertex 2
    let bowtie = PartiteGraph::plain(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])?;
    println!("bowtie: {:?}", common_vertices(&bowtie, 3)?.iter().collect::<Vec<_>>());

    // K4 minus an edge: triangles {0,1,2} and {0,1,3}
    let diamond = PartiteGraph::plain(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])?;
    println!("diamond: {:?}", common_vertices(&diamond, 3)?.iter().collect::<Vec<_>>());

    // seven vertices would be too many for s = 3
    let too_big = PartiteGraph::plain(7, [(0, 1), (1, 2), (0, 2)])?;
    if let Err(e) = common_vertices(&too_big, 3) {
        println!("7 vertices, s = 3: {e}");
    }
    Ok(())
}
