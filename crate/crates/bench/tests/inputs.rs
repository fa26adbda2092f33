use forestsym::graphs::graph_of;
use forestsym::HessenbergFunction;
use forestsym_bench::{band, complete, path};

#[test]
fn inputs_have_the_expected_edges() {
    for n in 1..=7 {
        assert_eq!(complete(n), HessenbergFunction::complete(n));
        assert_eq!(graph_of(&complete(n)).edges().len(), n * (n - 1) / 2);
        assert_eq!(graph_of(&path(n)).edges().len(), n - 1);
        assert_eq!(graph_of(&band(n)).edges().len(), (2 * n).saturating_sub(3));
    }
}
