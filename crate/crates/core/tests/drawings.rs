use onedisk::search::{plane_drawings, SearchLimits};
use onedisk::{check, construct_extremal, double, BipartiteGraph};

#[test]
fn k33_has_one_planar_drawings_without_a_one_disk_face() {
    let g = BipartiteGraph::complete(3, 3).unwrap();
    let all = plane_drawings(&g, &SearchLimits::with_budget(60.0)).unwrap();
    assert!(all.iter().all(|d| d.is_one_planar()));
    let enclosed = all
        .iter()
        .find(|d| !d.is_one_disk())
        .expect("some drawing encloses an X vertex");
    assert!(enclosed.find_one_disk_face().is_none());
    for f in enclosed.faces() {
        assert!((0..3).any(|u| !f.visits(u)));
    }
    // still counted as 1-planar by the checker, but the 1-disk bound does not apply
    let report = check(&g, Some(enclosed));
    assert!(report.one_planar_drawing && !report.one_disk_drawing);
    assert!(!report.entry("one_disk").unwrap().applicable);
    assert!(report.is_clean());
}

#[test]
fn doubled_extremal_edge_count() {
    for x in 3..=8 {
        let y = 3 * (x - 2);
        let (_, d) = construct_extremal(x, y).unwrap();
        let star = double(&d).unwrap();
        assert_eq!(star.graph_star.edge_count(), 6 * x + 4 * y - 12, "x={x}");
        assert_eq!(star.drawing_star.crossing_count(), 2 * d.crossing_count());
        assert!(check(&star.graph_star, Some(&star.drawing_star)).is_clean());
    }
}

#[test]
fn five_nine_has_a_face_on_all_of_x() {
    let (_, d) = construct_extremal(5, 9).unwrap();
    let face = d.find_one_disk_face().unwrap();
    assert!((0..5).all(|u| face.visits(u)));
    assert_eq!(d.crossing_count(), 9);
}
