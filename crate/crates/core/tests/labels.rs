use spin_decomp::partition::{enumerate_rp, Partition};
use spin_decomp::projectives::{lemma_m, reduced_projective, residue_seq};
use spin_decomp::theorems::{
    d_label, m_bound, matrix_fragment, mu_table, regularization_multiplicity, verify_all, Entry,
};
use spin_decomp::OddPrime;

fn pr(p: u32) -> OddPrime {
    OddPrime::new(p).unwrap()
}

#[test]
fn recipe_lengths_and_repeats() {
    for p in [5, 7, 11, 13].map(pr) {
        let ell = p.ell();
        for n in p.get()..=60 {
            for j in 0..=lemma_m(n, p) {
                let r = residue_seq(n, j, p).unwrap();
                let s = r.seq.entries();
                assert_eq!(s.len(), n as usize, "n={n} j={j} p={p}");
                for w in 0..s.len().saturating_sub(1) {
                    if s[w] == s[w + 1] {
                        assert!([0, 1, ell - 1].contains(&s[w]), "n={n} j={j} p={p} {s:?}");
                        assert_ne!(s.get(w + 2), Some(&s[w]), "n={n} j={j} p={p} {s:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn table_one_sizes() {
    for p in [5, 7, 11, 13].map(pr) {
        for n in p.get()..=60 {
            let lo = 1 + u32::from(n == p.get());
            for k in lo..=p.ell() {
                let mu = mu_table(n, p, k).unwrap();
                assert_eq!(mu.size(), n, "n={n} p={p} k={k}");
            }
        }
    }
}

#[test]
fn labels_are_restricted_members() {
    for p in [3, 5, 7, 11].map(pr) {
        for n in p.get()..=26 {
            let rp = enumerate_rp(n, p);
            for j in 0..=m_bound(n, p).unwrap() {
                let l = d_label(n, p, j).unwrap();
                assert!(rp.contains(&l), "n={n} p={p} j={j} {l}");
            }
        }
    }
}

#[test]
fn reduced_projectives_vanish_above() {
    for p in [5, 7].map(pr) {
        for n in p.get()..=20 {
            for j in 0..=lemma_m(n, p) {
                let v = reduced_projective(n, j, p).unwrap();
                assert!(
                    v.keys().all(|mu| mu.part(0) <= n - j),
                    "n={n} j={j} p={p}: {v}"
                );
            }
        }
    }
}

#[test]
fn diagonal_agrees_with_regularization() {
    for p in [5, 7].map(pr) {
        for n in p.get() + 1..=24 {
            let f = matrix_fragment(n, p).unwrap();
            for j in 0..=m_bound(n, p).unwrap() {
                let lambda = &f.rows[j as usize];
                let reg = spin_decomp::partition::regularize_2row(lambda, p).unwrap();
                let Some(reg) = reg else { continue };
                if reg != f.cols[j as usize] {
                    continue;
                }
                let v = regularization_multiplicity(lambda, p).unwrap().unwrap();
                assert_eq!(
                    f.entry(j as usize, j as usize),
                    Entry::Exact(v),
                    "n={n} p={p} j={j}"
                );
            }
        }
    }
}

#[test]
fn two_row_labels_at_twelve() {
    let want = ["5,5,2", "6,5,1", "7,4,1", "8,4", "5,4,3", "5,4,2,1"];
    for (j, w) in want.iter().enumerate() {
        assert_eq!(
            *d_label(12, pr(5), j as u32).unwrap(),
            w.parse::<Partition>().unwrap()
        );
    }
}

#[test]
fn verification_passes_on_a_sample() {
    for (n, p) in [(13, 5), (14, 7), (22, 11), (16, 3), (11, 11)] {
        let r = verify_all(n, pr(p)).unwrap();
        assert!(
            r.pass(),
            "n={n} p={p}: {:?}",
            r.failures().collect::<Vec<_>>()
        );
    }
}
