//! Exact character theory over cyclotomic fields.

mod classfn;
mod cyclotomic;
mod dixon;
mod table;

pub use classfn::{
    check_embedding, fixed_dim, induce, inner_product, permutation_character, restrict, ClassFunction, TableJson,
};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use dixon::{character_table, character_table_for_classes, character_table_with};
pub(crate) use classfn::{as_multiplicity, inner_product_values};
pub use table::{decompose, product_table, product_table_with, CharacterTable};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::error::Error;
    use crate::permgroups::{conjugacy_classes, FiniteGroup, Group, Perm, PermGroup};

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(v)
    }

    fn ints(v: &[i64]) -> Vec<Cyclotomic> {
        v.iter().map(|&x| c(x)).collect()
    }

    /// Automorphisms of the butterfly (centre 0, triangles 012 and 034).
    fn butterfly_aut() -> PermGroup {
        let g = |s: &str| Perm::parse_cycles(s, 5).unwrap();
        PermGroup::close_generators(&[g("(1 2)"), g("(1 3)(2 4)")], 5).unwrap()
    }

    #[test]
    fn s2_table() {
        let t = character_table(&PermGroup::symmetric(2).unwrap()).unwrap();
        assert_eq!(t.rows(), &[ints(&[1, 1]), ints(&[1, -1])]);
    }

    #[test]
    fn trivial_group_table() {
        let t = character_table(&PermGroup::symmetric(0).unwrap()).unwrap();
        assert_eq!(t.rows(), &[ints(&[1])]);
    }

    #[test]
    fn cyclic3_matches_fourier_table() {
        let t = character_table(&FiniteGroup::cyclic(3).unwrap()).unwrap();
        // independent discrete Fourier table: χ_j(g^k) = ζ3^{jk}
        let mut want: Vec<Vec<Cyclotomic>> = (0..3)
            .map(|j| (0..3).map(|k| Cyclotomic::root_of_unity(3, j * k)).collect())
            .collect();
        want.sort();
        let mut got = t.rows().to_vec();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(t.rows()[0], ints(&[1, 1, 1]));
    }

    #[test]
    fn d4_table_matches_displayed_rows() {
        let g = butterfly_aut();
        assert_eq!(g.order(), 8);
        let t = character_table(&g).unwrap();
        let cc = &t.classes;
        // locate the displayed column labels
        let idx = |p: &str| cc.class_of[g.index_of(&Perm::parse_cycles(p, 5).unwrap()).unwrap()];
        let cols = [idx("()"), idx("(1 3 2 4)"), idx("(1 2)(3 4)"), idx("(1 3)(2 4)"), idx("(1 2)")];
        let mut got: Vec<Vec<i64>> = t
            .rows()
            .iter()
            .map(|r| cols.iter().map(|&cl| r[cl].to_i64().unwrap()).collect())
            .collect();
        got.sort();
        let mut want = vec![
            vec![1, 1, 1, 1, 1],
            vec![1, -1, 1, -1, 1],
            vec![1, -1, 1, 1, -1],
            vec![1, 1, 1, -1, -1],
            vec![2, 0, -2, 0, 0],
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn d5_needs_irrationals() {
        let g = |s: &str| Perm::parse_cycles(s, 5).unwrap();
        let d5 = PermGroup::close_generators(&[g("(0 1 2 3 4)"), g("(1 4)(2 3)")], 5).unwrap();
        let t = character_table(&d5).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 2]);
        assert!(t.rows().iter().flatten().any(|v| v.conductor() == 5));
        // table is stable under Galois conjugation
        let mut conj: Vec<Vec<Cyclotomic>> = t.rows().iter().map(|r| r.iter().map(|v| v.galois(2)).collect()).collect();
        conj.sort();
        let mut rows = t.rows().to_vec();
        rows.sort();
        assert_eq!(conj, rows);
    }

    #[test]
    fn column_orthogonality() {
        for g in [PermGroup::symmetric(4).unwrap(), butterfly_aut()] {
            let t = character_table(&g).unwrap();
            let cc = &t.classes;
            for a in 0..cc.len() {
                for b in 0..cc.len() {
                    let s: Cyclotomic = t.rows().iter().map(|r| &r[a] * &r[b].conj()).sum();
                    let want = if a == b { (cc.group_order / cc.size(a)) as i64 } else { 0 };
                    assert_eq!(s, c(want));
                }
            }
        }
    }

    #[test]
    fn inner_products_and_decompose() {
        let g = butterfly_aut();
        let t = character_table(&g).unwrap();
        let triv = t.row(0);
        assert_eq!(inner_product(&triv, &triv).unwrap(), c(1));
        let reg = ClassFunction::regular(t.classes.clone());
        assert_eq!(inner_product(&reg, &t.row(4)).unwrap(), c(2));
        assert_eq!(decompose(&reg, &t).unwrap(), vec![1, 1, 1, 1, 2]);
        assert_eq!(decompose(&triv, &t).unwrap(), vec![1, 0, 0, 0, 0]);
        let half = ClassFunction::constant(t.classes.clone(), 1).add(&t.row(1)).unwrap();
        assert!(decompose(&half, &t).is_ok());
        let neg = t.row(1).scale_int(-1);
        assert!(matches!(decompose(&neg, &t), Err(Error::NotACharacter(_))));
        let other = character_table(&PermGroup::symmetric(3).unwrap()).unwrap();
        assert!(matches!(inner_product(&triv, &other.row(0)), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn s3_permutation_character() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let t = character_table(&s3).unwrap();
        let pts: Vec<usize> = (0..3).collect();
        let pc = permutation_character(&s3, &t.classes, &pts, |i, &p| s3.element(i).apply(p)).unwrap();
        assert_eq!(pc.values, ints(&[3, 1, 0]));
        assert_eq!(decompose(&pc, &t).unwrap(), vec![1, 0, 1]);
        let empty: Vec<usize> = Vec::new();
        let z = permutation_character(&s3, &t.classes, &empty, |i, &p| s3.element(i).apply(p)).unwrap();
        assert!(z.values.iter().all(|v| v.is_zero()));
        assert!(permutation_character(&s3, &t.classes, &[0usize], |i, &p| s3.element(i).apply(p)).is_err());
    }

    #[test]
    fn induce_from_trivial_subgroup() {
        let s2 = PermGroup::symmetric(2).unwrap();
        let cc = Arc::new(conjugacy_classes(&s2).unwrap());
        let triv = PermGroup::trivial(2);
        let tt = character_table(&triv).unwrap();
        let emb = triv.embedding_into(&s2).unwrap();
        let ind = induce(&tt.row(0), &triv, &s2, &emb, &cc).unwrap();
        assert_eq!(ind.values, ints(&[2, 0]));
    }

    #[test]
    fn induce_triv_to_s5_has_degree_15() {
        let g = butterfly_aut();
        let s5 = PermGroup::symmetric(5).unwrap();
        let t = character_table(&g).unwrap();
        let cc = Arc::new(conjugacy_classes(&s5).unwrap());
        let emb = g.embedding_into(&s5).unwrap();
        let ind = induce(&t.row(0), &g, &s5, &emb, &cc).unwrap();
        assert_eq!(ind.values[0], c(15));
    }

    #[test]
    fn restrictions() {
        let g = butterfly_aut();
        let t = character_table(&g).unwrap();
        let r2 = Perm::parse_cycles("(1 2)(3 4)", 5).unwrap();
        let h = PermGroup::close_generators(&[r2], 5).unwrap();
        let th = character_table(&h).unwrap();
        let emb = h.embedding_into(&g).unwrap();
        let rho = restrict(&t.row(4), &h, &g, &emb, &th.classes).unwrap();
        assert_eq!(rho.values, ints(&[2, -2]));
        let tr = restrict(&t.row(0), &h, &g, &emb, &th.classes).unwrap();
        assert_eq!(tr, th.row(0));
        // sign of S3 restricted to A3 is trivial
        let s3 = PermGroup::symmetric(3).unwrap();
        let t3 = character_table(&s3).unwrap();
        let a3 = PermGroup::close_generators(&[Perm::parse_cycles("(0 1 2)", 3).unwrap()], 3).unwrap();
        let ta = character_table(&a3).unwrap();
        let sign = t3.find_row(&ints(&[1, -1, 1])).unwrap();
        let res = restrict(&t3.row(sign), &a3, &s3, &a3.embedding_into(&s3).unwrap(), &ta.classes).unwrap();
        assert_eq!(res, ta.row(0));
    }

    #[test]
    fn bad_embedding_rejected() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let s2 = PermGroup::symmetric(2).unwrap();
        let t2 = character_table(&s2).unwrap();
        let cc = Arc::new(conjugacy_classes(&s3).unwrap());
        // (0 1 2) has order 3, so this is not a homomorphism from S2
        let bad = vec![0, s3.index_of(&Perm::parse_cycles("(0 1 2)", 3).unwrap()).unwrap()];
        assert!(induce(&t2.row(0), &s2, &s3, &bad, &cc).is_err());
        assert!(induce(&t2.row(0), &s2, &s3, &[0, 0], &cc).is_err());
    }

    #[test]
    fn induce_s1xs1_to_s2() {
        let s2 = PermGroup::symmetric(2).unwrap();
        let t2 = character_table(&s2).unwrap();
        let y = crate::permgroups::young_embedding(1, 1).unwrap();
        let ty = character_table(&y.image).unwrap();
        let ind = induce(&ty.row(0), &y.image, &s2, &y.image.embedding_into(&s2).unwrap(), &t2.classes).unwrap();
        assert_eq!(decompose(&ind, &t2).unwrap(), vec![1, 1]);
    }

    #[test]
    fn fixed_dims() {
        let g = butterfly_aut();
        let t = character_table(&g).unwrap();
        let f = g.index_of(&Perm::parse_cycles("(1 3)(2 4)", 5).unwrap()).unwrap();
        assert_eq!(fixed_dim(&t.row(4), &[0, f]).unwrap(), 1);
        let reg = ClassFunction::regular(t.classes.clone());
        assert_eq!(fixed_dim(&reg, &[0, f]).unwrap(), 4);
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(fixed_dim(&t.row(3), &all).unwrap(), 0);
        let neg = t.row(0).scale_int(-1);
        assert!(matches!(fixed_dim(&neg, &all), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn product_tables() {
        let s2 = character_table(&PermGroup::symmetric(2).unwrap()).unwrap();
        let p = product_table(&s2, &s2).unwrap();
        assert_eq!(p.degrees(), vec![1, 1, 1, 1]);
        let triv = character_table(&PermGroup::trivial(1)).unwrap();
        assert_eq!(product_table(&triv, &triv).unwrap().rows(), &[ints(&[1])]);
        let d4 = character_table(&butterfly_aut()).unwrap();
        let p = product_table(&d4, &s2).unwrap();
        let mut degs = p.degrees();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2]);
        let lim = crate::limits::Limits {
            group_order_cap: 15,
            ..Default::default()
        };
        assert!(product_table_with(&d4, &s2, &lim).is_err());
    }

    #[test]
    fn product_table_agrees_with_dixon_on_product_group() {
        let a = FiniteGroup::cyclic(3).unwrap();
        let b = PermGroup::symmetric(3).unwrap();
        let ta = character_table(&a).unwrap();
        let tb = character_table(&b).unwrap();
        let prod = crate::permgroups::DirectProduct::new(&a, &b);
        let direct = character_table(&prod).unwrap();
        let p = product_table(&ta, &tb).unwrap();
        assert_eq!(direct.classes.members, p.classes.members);
        assert_eq!(direct.rows(), p.rows());
        assert_eq!(prod.order(), 18);
    }
}
