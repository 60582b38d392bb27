use hypercount_core::counting::{count_homs, count_subs, HomCounter};
use hypercount_core::hypercore::io::HgFile;
use hypercount_core::oracle::{brute_colorful_simplex, brute_hom, brute_sub, OracleGuard};
use hypercount_core::patterns::classify;
use hypercount_core::reductions::{
    build_gadget, colorful_hom_count, color_coding_simplex, tensor_product, GadgetSpec,
};
use hypercount_core::{Hypergraph, Level};

const HOUSE: &str = "\
# square with a roof
e a b
e b c
e c d
e d a
e a b r
";

#[test]
fn parsed_input_counts_match_oracles() {
    let g = HgFile::parse(HOUSE).unwrap().graph;
    let path = HgFile::parse("e x y\ne y z\n").unwrap().graph;
    let guard = OracleGuard::default();
    for l in [Level::Finite(0), Level::Finite(1), Level::Infinity] {
        assert_eq!(count_homs(&g, &path, l).unwrap(), brute_hom(&g, &path, &guard).unwrap());
        assert_eq!(count_subs(&g, &path, l).unwrap(), brute_sub(&g, &path, &guard).unwrap());
    }
    // rendering and reparsing keep the edge set
    let f = HgFile::parse(HOUSE).unwrap();
    let again = HgFile::parse(&f.render().unwrap()).unwrap();
    assert_eq!(f.labeled_edges(), again.labeled_edges());
}

#[test]
fn reused_counter_agrees_with_one_shot_counts() {
    let c5 = Hypergraph::from_edges(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
    let counter = HomCounter::new(&c5, Level::Finite(0)).unwrap();
    for k in 5..9u32 {
        let wheel = Hypergraph::new(
            k as usize + 1,
            (0..k).flat_map(|i| [vec![i, (i + 1) % k], vec![i, k]]),
        )
        .unwrap();
        assert_eq!(counter.count(&wheel).unwrap(), count_homs(&wheel, &c5, Level::Finite(0)).unwrap());
    }
}

#[test]
fn tensor_counts_multiply_through_the_engine() {
    let f = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2]]);
    let g = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]);
    let h = Hypergraph::from_edges(4, &[&[0, 1, 2], &[1, 3]]);
    let l = Level::Infinity;
    let product = count_homs(&tensor_product(&g, &h), &f, l).unwrap();
    assert_eq!(product, count_homs(&g, &f, l).unwrap() * count_homs(&h, &f, l).unwrap());
}

#[test]
fn gadget_route_decides_colorful_triangles() {
    // an obstruction at level 0 whose core is a triangle of colors
    let pattern = Hypergraph::from_edges(6, &[&[0, 1, 5], &[1, 2, 3], &[0, 2, 4]]);
    let l = Level::Finite(0);
    assert!(!classify(&pattern, l).unwrap().its_free);
    let spec = GadgetSpec::auto(&pattern, l).unwrap();
    let guard = OracleGuard::default();
    for text in [
        "e a b\ne b c\ne a c\nc a 0\nc b 1\nc c 2\n",
        "e a b\ne b c\ne a c\nc a 0\nc b 1\nc c 1\n",
        "e a b\ne b c\ne c d\nc a 0\nc b 1\nc c 2\nc d 0\n",
    ] {
        let gc = HgFile::parse(text).unwrap().colored().unwrap();
        let gadget = build_gadget(&gc, &spec).unwrap();
        let via_gadget = colorful_hom_count(&gadget, &pattern, l).unwrap() > 0;
        assert_eq!(via_gadget, brute_colorful_simplex(&gc, 2, &guard).unwrap(), "{text}");
    }
}

#[test]
fn color_coding_finds_planted_triangle() {
    let mut edges: Vec<Vec<u32>> = (0..12).map(|i| vec![i, (i + 1) % 12]).collect();
    edges.extend([vec![3, 7], vec![7, 10]]);
    let cycle_only = Hypergraph::new(12, edges.clone()).unwrap();
    edges.push(vec![3, 10]);
    let planted = Hypergraph::new(12, edges).unwrap();
    assert!(color_coding_simplex(&planted, 2, 60, 1).unwrap());
    assert!(!color_coding_simplex(&cycle_only, 2, 60, 1).unwrap());
}
