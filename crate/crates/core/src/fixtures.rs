//! Named canonical structures used by tests, the CLI and the acceptance suite.

use crate::error::{Error, Result};
use crate::model::EventStructure;

pub const FIXTURE_NAMES: [&str; 8] = ["EMPTY", "SINGLE", "CHAIN3", "ANTI3", "CONF2", "FORK", "TWIN2", "S"];

/// Returns the named fixture.
///
/// `S` is the nine-event simple structure of degree 3 that needs four
/// letters: covers `1<3, 1<4, 2<4, 2<5, 3<6, 3<7, 5<8, 5<9` and minimal
/// conflicts `6#7, 8#9, 3#5`.
pub fn fixture(name: &str) -> Result<EventStructure> {
    let es = match name {
        "EMPTY" => EventStructure::from_strs(&[], &[], &[]),
        "SINGLE" => EventStructure::from_strs(&["a"], &[], &[]),
        "CHAIN3" => EventStructure::from_strs(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[]),
        "ANTI3" => EventStructure::from_strs(&["a", "b", "c"], &[], &[]),
        "CONF2" => EventStructure::from_strs(&["a", "b"], &[], &[("a", "b")]),
        "FORK" => EventStructure::from_strs(&["r", "x", "y"], &[("r", "x"), ("r", "y")], &[]),
        "TWIN2" => EventStructure::from_strs(&["r", "x", "y"], &[("r", "x"), ("r", "y")], &[("x", "y")]),
        "S" => EventStructure::from_strs(
            &["1", "2", "3", "4", "5", "6", "7", "8", "9"],
            &[("1", "3"), ("1", "4"), ("2", "4"), ("2", "5"), ("3", "6"), ("3", "7"), ("5", "8"), ("5", "9")],
            &[("6", "7"), ("8", "9"), ("3", "5")],
        ),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(es.expect("fixtures are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_build() {
        for name in FIXTURE_NAMES {
            fixture(name).unwrap();
        }
        assert!(matches!(fixture("NOPE"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn fork_shape() {
        let es = fixture("FORK").unwrap();
        assert_eq!(es.relation("r", "x").unwrap(), crate::model::RelationKind::Below);
        assert_eq!(es.relation("x", "y").unwrap(), crate::model::RelationKind::Concurrent);
    }
}
