//! Finite pre-orders on labelled ground sets: storage, symmetric-part
//! classes, Hasse reduction on the class quotient, and JSON/DOT/TSV views.

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A reflexive, transitively closed relation on a fixed list of labels,
/// stored as a dense boolean matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderRelation {
    name: String,
    labels: Vec<String>,
    holds: Vec<bool>,
}

/// Pairs present in one relation but not the other, as label pairs.
#[derive(Clone, Debug, Default)]
pub struct OrderDiff {
    pub only_left: Vec<(String, String)>,
    pub only_right: Vec<(String, String)>,
}

impl OrderDiff {
    pub fn is_empty(&self) -> bool {
        self.only_left.is_empty() && self.only_right.is_empty()
    }
}

impl OrderRelation {
    /// Builds the relation from a predicate, then forces reflexivity and
    /// takes the transitive closure.
    pub fn from_predicate(
        name: impl Into<String>,
        labels: Vec<String>,
        mut pred: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let len = labels.len();
        let mut holds = vec![false; len * len];
        for i in 0..len {
            for j in 0..len {
                holds[i * len + j] = i == j || pred(i, j);
            }
        }
        let mut out = OrderRelation {
            name: name.into(),
            labels,
            holds,
        };
        out.close();
        out
    }

    /// Builds the relation from generating pairs (indices into `labels`),
    /// then forces reflexivity and takes the transitive closure.
    pub fn from_pairs(
        name: impl Into<String>,
        labels: Vec<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let len = labels.len();
        let mut holds = vec![false; len * len];
        for (i, j) in pairs {
            if i >= len || j >= len {
                return Err(Error::Precondition(format!(
                    "pair ({i}, {j}) is out of range for {len} labels"
                )));
            }
            holds[i * len + j] = true;
        }
        let mut out = OrderRelation {
            name: name.into(),
            labels,
            holds,
        };
        out.close();
        Ok(out)
    }

    fn close(&mut self) {
        let len = self.labels.len();
        for i in 0..len {
            self.holds[i * len + i] = true;
        }
        for k in 0..len {
            for i in 0..len {
                if self.holds[i * len + k] {
                    for j in 0..len {
                        if self.holds[k * len + j] {
                            self.holds[i * len + j] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.holds[i * self.labels.len() + j]
    }

    pub fn holds_labels(&self, x: &str, y: &str) -> Result<bool> {
        let i = self
            .index_of(x)
            .ok_or_else(|| Error::Incompatible(format!("label {x:?} is not in the ground set")))?;
        let j = self
            .index_of(y)
            .ok_or_else(|| Error::Incompatible(format!("label {y:?} is not in the ground set")))?;
        Ok(self.holds(i, j))
    }

    /// All related pairs with the diagonal left out, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let len = self.labels.len();
        let mut out = Vec::new();
        for i in 0..len {
            for j in 0..len {
                if i != j && self.holds(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of related pairs, diagonal left out.
    pub fn pair_count(&self) -> usize {
        self.pairs().len()
    }

    /// Classes of the symmetric part (x ~ y when both x <= y and y <= x),
    /// each sorted, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let len = self.labels.len();
        let mut seen = vec![false; len];
        let mut out = Vec::new();
        for i in 0..len {
            if seen[i] {
                continue;
            }
            let mut class = Vec::new();
            for (j, seen_j) in seen.iter_mut().enumerate() {
                if self.holds(i, j) && self.holds(j, i) {
                    class.push(j);
                    *seen_j = true;
                }
            }
            out.push(class);
        }
        out
    }

    /// For each label index, the index of its class in `classes()`.
    pub fn class_of(&self) -> Vec<usize> {
        let classes = self.classes();
        let mut out = vec![0; self.labels.len()];
        for (c, class) in classes.iter().enumerate() {
            for &i in class {
                out[i] = c;
            }
        }
        out
    }

    fn check_same_ground(&self, other: &OrderRelation) -> Result<()> {
        if self.labels != other.labels {
            return Err(Error::Incompatible(
                "relations live on different ground sets".into(),
            ));
        }
        Ok(())
    }

    /// True when every related pair here is related in `other` too.
    pub fn is_subset_of(&self, other: &OrderRelation) -> Result<bool> {
        self.check_same_ground(other)?;
        Ok(self
            .holds
            .iter()
            .zip(&other.holds)
            .all(|(&mine, &theirs)| !mine || theirs))
    }

    /// True when the two relations contain exactly the same pairs.
    pub fn same_pairs(&self, other: &OrderRelation) -> Result<bool> {
        self.check_same_ground(other)?;
        Ok(self.holds == other.holds)
    }

    /// Label pairs related on exactly one side.
    pub fn diff(&self, other: &OrderRelation) -> Result<OrderDiff> {
        self.check_same_ground(other)?;
        let mut out = OrderDiff::default();
        let len = self.labels.len();
        for i in 0..len {
            for j in 0..len {
                let (left, right) = (self.holds(i, j), other.holds(i, j));
                if left != right {
                    let pair = (self.labels[i].clone(), self.labels[j].clone());
                    if left {
                        out.only_left.push(pair);
                    } else {
                        out.only_right.push(pair);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The Hasse data: symmetric classes plus the covering edges of the
    /// induced partial order on classes (edges point from lower to upper).
    pub fn hasse(&self) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
        let classes = self.classes();
        let count = classes.len();
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let mut below = vec![false; count * count];
        for u in 0..count {
            for v in 0..count {
                below[u * count + v] = u != v && self.holds(reps[u], reps[v]);
            }
        }
        let mut edges = Vec::new();
        for u in 0..count {
            for v in 0..count {
                if !below[u * count + v] {
                    continue;
                }
                let covered = (0..count).any(|w| below[u * count + w] && below[w * count + v]);
                if !covered {
                    edges.push((u, v));
                }
            }
        }
        (classes, edges)
    }

    /// JSON form: `{"ground": [labels], "pairs": [[i, j], ...]}` with the
    /// diagonal left implicit.
    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .pairs()
            .into_iter()
            .map(|(i, j)| json!([i, j]))
            .collect();
        json!({ "ground": self.labels, "pairs": pairs })
    }

    /// Reads the JSON form, closing the listed pairs reflexively and
    /// transitively.
    pub fn from_json(value: &Value, name: impl Into<String>) -> Result<OrderRelation> {
        let labels: Vec<String> = value
            .get("ground")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing ground array".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| Error::Json("non-string label".into()))
            })
            .collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = value
            .get("pairs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing pairs array".into()))?
            .iter()
            .map(|v| {
                let items = v
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| Error::Json("each pair must be a two-element array".into()))?;
                let i = items[0]
                    .as_u64()
                    .ok_or_else(|| Error::Json("non-integer pair index".into()))?;
                let j = items[1]
                    .as_u64()
                    .ok_or_else(|| Error::Json("non-integer pair index".into()))?;
                Ok((i as usize, j as usize))
            })
            .collect::<Result<_>>()?;
        OrderRelation::from_pairs(name, labels, pairs)
    }

    /// Tab-separated related pairs (diagonal left out): `low<TAB>high`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.pairs() {
            out.push_str(&format!("{}\t{}\n", self.labels[i], self.labels[j]));
        }
        out
    }

    /// Graphviz output of the Hasse diagram on the class quotient: one box
    /// per class listing its members, one colour per class, edges running
    /// upward from lower to higher classes.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 10] = [
            "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffed6f", "#80b1d3", "#fccde5",
            "#ccebc5", "#ffffb3",
        ];
        let (classes, edges) = self.hasse();
        let mut out = String::new();
        out.push_str("digraph order {\n");
        out.push_str(&format!("  label=\"{}\";\n", self.name));
        out.push_str("  rankdir=BT;\n  node [shape=box, style=filled];\n");
        for (c, class) in classes.iter().enumerate() {
            let members = class
                .iter()
                .map(|&i| self.labels[i].clone())
                .collect::<Vec<_>>()
                .join("\\n");
            out.push_str(&format!(
                "  c{c} [label=\"{members}\", fillcolor=\"{}\"];\n",
                PALETTE[c % PALETTE.len()]
            ));
        }
        for (u, v) in edges {
            out.push_str(&format!("  c{u} -> c{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for OrderRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "OrderRelation({}, {} labels, {} pairs)",
            self.name,
            self.labels.len(),
            self.pair_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn closure_is_taken() {
        let rel =
            OrderRelation::from_pairs("chain", labels(&["x", "y", "z"]), [(0, 1), (1, 2)]).unwrap();
        assert!(rel.holds(0, 2));
        assert!(rel.holds(1, 1));
        assert!(!rel.holds(2, 0));
        assert_eq!(rel.pair_count(), 3);
    }

    #[test]
    fn classes_group_the_symmetric_part() {
        let rel = OrderRelation::from_pairs(
            "two-cycle",
            labels(&["x", "y", "z"]),
            [(0, 1), (1, 0), (1, 2)],
        )
        .unwrap();
        assert_eq!(rel.classes(), vec![vec![0, 1], vec![2]]);
        assert_eq!(rel.class_of(), vec![0, 0, 1]);
    }

    #[test]
    fn hasse_drops_transitive_edges() {
        let rel =
            OrderRelation::from_pairs("chain", labels(&["x", "y", "z"]), [(0, 1), (1, 2), (0, 2)])
                .unwrap();
        let (classes, edges) = rel.hasse();
        assert_eq!(classes.len(), 3);
        assert_eq!(edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn hasse_contracts_classes_first() {
        // x ~ y below z: one edge from the merged class to z
        let rel =
            OrderRelation::from_pairs("merged", labels(&["x", "y", "z"]), [(0, 1), (1, 0), (0, 2)])
                .unwrap();
        let (classes, edges) = rel.hasse();
        assert_eq!(classes, vec![vec![0, 1], vec![2]]);
        assert_eq!(edges, vec![(0, 1)]);
    }

    #[test]
    fn subset_and_diff() {
        let small = OrderRelation::from_pairs("small", labels(&["x", "y", "z"]), [(0, 1)]).unwrap();
        let big =
            OrderRelation::from_pairs("big", labels(&["x", "y", "z"]), [(0, 1), (1, 2)]).unwrap();
        assert!(small.is_subset_of(&big).unwrap());
        assert!(!big.is_subset_of(&small).unwrap());
        let diff = small.diff(&big).unwrap();
        assert!(diff.only_left.is_empty());
        assert_eq!(
            diff.only_right,
            vec![
                ("x".to_string(), "z".to_string()),
                ("y".to_string(), "z".to_string())
            ]
        );
    }

    #[test]
    fn json_round_trip() {
        let rel =
            OrderRelation::from_pairs("chain", labels(&["x", "y", "z"]), [(0, 1), (1, 2)]).unwrap();
        let back = OrderRelation::from_json(&rel.to_json(), "chain").unwrap();
        assert!(rel.same_pairs(&back).unwrap());
        assert_eq!(rel.labels(), back.labels());
    }

    #[test]
    fn dot_output_mentions_every_class() {
        let rel = OrderRelation::from_pairs(
            "two-cycle",
            labels(&["x", "y", "z"]),
            [(0, 1), (1, 0), (1, 2)],
        )
        .unwrap();
        let dot = rel.to_dot();
        assert!(dot.contains("digraph order"));
        assert!(dot.contains("x\\ny"));
        assert!(dot.contains("c0 -> c1;"));
    }

    #[test]
    fn mismatched_grounds_are_rejected() {
        let one = OrderRelation::from_pairs("a", labels(&["x"]), []).unwrap();
        let two = OrderRelation::from_pairs("b", labels(&["y"]), []).unwrap();
        assert!(one.is_subset_of(&two).is_err());
        assert!(one.diff(&two).is_err());
    }
}
