//! JSON Cayley-table files: `{"order": n, "labels": [...], "table": [[...]]}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TableError};
use crate::group::{validate_table_with_labels, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn from_group(g: &GroupTable) -> Self {
        GroupFile {
            order: g.order(),
            labels: g.labels().to_vec(),
            table: g.rows(),
        }
    }

    /// Runs the full table validation, including associativity.
    pub fn into_group(self) -> Result<GroupTable> {
        if self.order != self.table.len() {
            return Err(TableError::OrderMismatch {
                declared: self.order,
                rows: self.table.len(),
            }
            .into());
        }
        Ok(validate_table_with_labels(&self.table, self.labels)?)
    }
}

pub fn group_to_json(g: &GroupTable) -> String {
    serde_json::to_string(&GroupFile::from_group(g)).expect("group file serializes")
}

pub fn group_from_json(text: &str) -> Result<GroupTable> {
    serde_json::from_str::<GroupFile>(text)?.into_group()
}

pub fn load_group(path: impl AsRef<Path>) -> Result<GroupTable> {
    group_from_json(&fs::read_to_string(path)?)
}

pub fn save_group(g: &GroupTable, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, group_to_json(g) + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::group::{make_cyclic, make_quaternion};

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join(format!("soclekit-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("q8.json");
        let q = make_quaternion();
        save_group(&q, &path).unwrap();
        let back = load_group(&path).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.label(2), "i");
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn corrupted_table_reports_associativity_witness() {
        // swap two entries of Z5 so the table stays Latin with identity and inverses
        let mut file = GroupFile::from_group(&make_cyclic(5).unwrap());
        file.table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let text = serde_json::to_string(&file).unwrap();
        let err = group_from_json(&text).unwrap_err();
        let obj = err.to_object();
        assert_eq!(obj.error, "associativity");
        assert_eq!(obj.witness.len(), 3);
        let [a, b, c] = [obj.witness[0], obj.witness[1], obj.witness[2]];
        let t = &file.table;
        assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
    }

    #[test]
    fn non_json_and_mismatches() {
        assert!(matches!(group_from_json("not json"), Err(Error::Json(_))));
        assert_eq!(group_from_json("not json").unwrap_err().code(), "parse");
        let err = group_from_json(r#"{"order": 2, "labels": ["e"], "table": [[0,1],[1,0]]}"#)
            .unwrap_err();
        assert_eq!(err.code(), "label_count");
        let err = group_from_json(r#"{"order": 3, "labels": ["e","a"], "table": [[0,1],[1,0]]}"#)
            .unwrap_err();
        assert_eq!(err.code(), "order_mismatch");
        assert!(load_group("/nonexistent/soclekit.json").is_err());
    }
}
