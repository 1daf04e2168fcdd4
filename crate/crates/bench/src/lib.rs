//! Benchmark inputs shared by the criterion benches.

use secdom::generators::{gen_complete_buoy, gen_cycle_expansion, gen_disjoint_c5};
use secdom::harness::sample_instance;
use secdom::{ConstructionClass, Graph};

/// A named input for one construction class.
pub struct Case {
    pub name: String,
    pub class: ConstructionClass,
    pub graph: Graph,
}

/// Tight families at a few sizes plus seeded random members of each class.
pub fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    for k in [2, 4, 8] {
        out.push(Case {
            name: format!("c5x{k}"),
            class: ConstructionClass::P5Free,
            graph: gen_disjoint_c5(k),
        });
    }
    out.push(Case {
        name: "buoy-3-3-3-3-3".into(),
        class: ConstructionClass::P5C4Free,
        graph: gen_complete_buoy([3; 5]).expect("positive sizes"),
    });
    out.push(Case {
        name: "expansion-3-3-3-3-3".into(),
        class: ConstructionClass::P5C3Free,
        graph: gen_cycle_expansion([3; 5]).expect("positive sizes"),
    });
    for class in ConstructionClass::ALL {
        let found = (0..256).find_map(|i| {
            let g = sample_instance(class, 11, i, 12, 10_000).ok().flatten()?;
            (g.n() >= 9).then_some(g)
        });
        if let Some(graph) = found {
            out.push(Case { name: format!("random-n{}", graph.n()), class, graph });
        }
    }
    out
}
