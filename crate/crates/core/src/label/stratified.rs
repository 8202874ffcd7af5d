use std::collections::BTreeMap;

use super::{checked, Labelling, Strategy};
use crate::error::{Error, Result};
use crate::graph::{antichain_elimination, chromatic_exact, greedy_color, Coloring, Elimination, DEFAULT_EXACT_LIMIT};
use crate::model::{Ev, EventStructure};

/// A map from events to levels such that every level is an antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratifyingFunction {
    /// Level of each event, by index.
    pub levels: Vec<usize>,
}

impl StratifyingFunction {
    /// Event height, the canonical stratifier.
    pub fn height(es: &EventStructure) -> Self {
        StratifyingFunction { levels: es.heights().to_vec() }
    }

    pub fn from_map(es: &EventStructure, map: &BTreeMap<String, usize>) -> Result<Self> {
        if let Some(stray) = map.keys().find(|k| es.index_of(k).is_err()) {
            return Err(Error::UnknownEvent(stray.clone()));
        }
        let levels = es
            .ids()
            .iter()
            .map(|id| map.get(id.as_str()).copied().ok_or_else(|| Error::UnlabelledEvent(id.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(StratifyingFunction { levels })
    }

    /// Fails with `NotStratifying` on the first comparable pair sharing a level.
    pub fn validate(&self, es: &EventStructure) -> Result<()> {
        if self.levels.len() != es.len() {
            return Err(Error::BadOrder(format!(
                "stratifier has {} levels for {} events",
                self.levels.len(),
                es.len()
            )));
        }
        for x in es.events() {
            for y in es.up_set(x).ones() {
                if x != y && self.levels[x] == self.levels[y] {
                    return Err(Error::NotStratifying(es.name(x).to_string(), es.name(y).to_string(), self.levels[x]));
                }
            }
        }
        Ok(())
    }

    /// Events grouped by level, in increasing level order.
    pub fn strata(&self) -> BTreeMap<usize, Vec<Ev>> {
        let mut out: BTreeMap<usize, Vec<Ev>> = BTreeMap::new();
        for (x, &l) in self.levels.iter().enumerate() {
            out.entry(l).or_default().push(x);
        }
        out
    }
}

/// Largest level difference across an orthogonal pair; 0 without edges.
pub fn skewness(es: &EventStructure, h: &StratifyingFunction) -> usize {
    es.orthogonal_pairs().into_iter().map(|(x, y)| h.levels[x].abs_diff(h.levels[y])).max().unwrap_or(0)
}

fn color_level(es: &EventStructure, level: usize, events: &[Ev]) -> Result<Coloring> {
    let (g, elim) = antichain_elimination(es, events)?;
    let coloring = match elim {
        Elimination::Perfect(peo) => {
            let order: Vec<usize> = peo.into_iter().rev().collect();
            greedy_color(&g.graph, &order)?
        }
        Elimination::ChordlessCycle(_) => match chromatic_exact(&g.graph, 3, DEFAULT_EXACT_LIMIT) {
            Ok((_, c)) => c,
            Err(Error::ExceedsCap { best, .. }) => best,
            Err(Error::SizeLimitExceeded { .. }) => {
                let order: Vec<usize> = (0..g.len()).collect();
                greedy_color(&g.graph, &order)?
            }
            Err(e) => return Err(e),
        },
    };
    if coloring.num_colors > 3 {
        return Err(Error::LevelNeedsMoreThanThreeColors { level, colors: coloring.num_colors });
    }
    Ok(coloring)
}

/// Letter `(c, h(x) mod n)` flattened to `c * n + h(x) mod n`, where `c`
/// colors the level of `x` and `n` is the skewness plus one.
///
/// `h` defaults to event height.
pub fn label_stratified(es: &EventStructure, h: Option<&StratifyingFunction>) -> Result<Labelling> {
    let default;
    let h = match h {
        Some(h) => h,
        None => {
            default = StratifyingFunction::height(es);
            &default
        }
    };
    h.validate(es)?;
    let n = skewness(es, h) + 1;
    let mut letters = vec![0; es.len()];
    let mut k = 0;
    for (level, events) in h.strata() {
        let coloring = color_level(es, level, &events)?;
        k = k.max(coloring.num_colors);
        for (i, &x) in events.iter().enumerate() {
            letters[x] = coloring.colors[i] * n + level % n;
        }
    }
    checked(es, Labelling::from_indices(es, letters, Strategy::Stratified).with_alphabet(k * n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn chain_and_antichain() {
        let chain = fixture("CHAIN3").unwrap();
        let lab = label_stratified(&chain, None).unwrap();
        assert_eq!(lab.alphabet_size, 1);
        assert_eq!(skewness(&chain, &StratifyingFunction::height(&chain)), 0);

        let anti = fixture("ANTI3").unwrap();
        let lab = label_stratified(&anti, None).unwrap();
        assert_eq!(lab.alphabet_size, 3);
        assert_eq!(lab.letters_used(), 3);
    }

    #[test]
    fn s_with_height() {
        // Brute force over S: skew 2 under height, levels colored with 2, 3 and 2 colors.
        let es = fixture("S").unwrap();
        let h = StratifyingFunction::height(&es);
        assert_eq!(skewness(&es, &h), 2);
        let lab = label_stratified(&es, Some(&h)).unwrap();
        assert_eq!(lab.alphabet_size, 9);
        assert_eq!(lab.letters_used(), 7);
    }

    #[test]
    fn rejects_comparable_levels() {
        let es = fixture("CHAIN3").unwrap();
        let flat = StratifyingFunction { levels: vec![0, 0, 1] };
        assert!(
            matches!(label_stratified(&es, Some(&flat)), Err(Error::NotStratifying(a, b, 0)) if a == "a" && b == "b")
        );
    }

    #[test]
    fn from_map_checks_coverage() {
        let es = fixture("CONF2").unwrap();
        let mut map = BTreeMap::from([("a".to_string(), 0)]);
        assert!(matches!(StratifyingFunction::from_map(&es, &map), Err(Error::UnlabelledEvent(_))));
        map.insert("b".into(), 0);
        map.insert("q".into(), 0);
        assert!(matches!(StratifyingFunction::from_map(&es, &map), Err(Error::UnknownEvent(_))));
        map.remove("q");
        let h = StratifyingFunction::from_map(&es, &map).unwrap();
        assert_eq!(label_stratified(&es, Some(&h)).unwrap().alphabet_size, 2);
    }

    #[test]
    fn four_antichain_needs_four_colors() {
        let es = EventStructure::from_strs(&["a", "b", "c", "d"], &[], &[]).unwrap();
        assert!(matches!(
            label_stratified(&es, None),
            Err(Error::LevelNeedsMoreThanThreeColors { level: 0, colors: 4 })
        ));
    }
}
