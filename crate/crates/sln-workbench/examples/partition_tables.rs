//! Tabulates the combinatorics that govern the fiber geometry: tableau
//! counts (Kostka numbers), bounded-increasing-subsequence permutation
//! counts, their coincidence, and the fixed-flag variety dimension.

use sln_workbench::partition_comb::{
    breakings, catalan, kostka, lis_count, orbits_in_closure, spaltenstein_dim, Partition,
};

fn weight(m: usize, n: u64) -> Partition {
    Partition::new(
        std::iter::repeat(1)
            .take(m)
            .chain(std::iter::repeat(n.saturating_sub(1)).take(m)),
    )
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("m,n,kostka,lis_count,equal,dim");
    for m in 1..=5usize {
        for n in 2..=4u64 {
            let shape = Partition::rectangle(m, n);
            let k = kostka(&shape, &weight(m, n))?;
            let l = lis_count(m, n as usize)?;
            let dim = spaltenstein_dim(&shape, &weight(m, n))?;
            println!("{m},{n},{k},{l},{},{dim}", k == l);
            assert_eq!(k, l);
            assert_eq!(dim, 2 * m as i64 * (n as i64 - 1));
        }
    }
    println!();

    println!(
        "the n = 2 column is the Catalan sequence: {:?}",
        (1..=6u64).map(catalan).collect::<Vec<_>>()
    );
    println!();

    // Dominance order: the nilpotent classes whose closure contains a given one.
    let pi = Partition::new([2, 1, 1]);
    let above = orbits_in_closure(&pi, 4);
    println!("classes whose closure contains {:?}:", pi.parts());
    for p in &above {
        println!("  {:?}", p.parts());
    }
    println!();

    // How eigenvalue clusters can merge: the breakings of a spectrum type.
    let sigma = Partition::new([2, 2]);
    let list = breakings(&pi, &sigma)?;
    println!(
        "breakings of {:?} along {:?} ({} total):",
        pi.parts(),
        sigma.parts(),
        list.len()
    );
    for b in &list {
        let pieces: Vec<&[u64]> = b.pieces().iter().map(|p| p.parts()).collect();
        println!("  {pieces:?}");
    }
    Ok(())
}
