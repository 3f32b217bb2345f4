//! Decide whether a finite-dimensional group representation over a small
//! finite field is *very simple* — i.e. whether the only subalgebras of
//! End(V) that are stable under conjugation by the group image are the
//! scalars and all of End(V) — and, when it is not, produce a verifiable
//! witness: a reducibility witness, a non-trivial endomorphism field, an
//! induced (block) structure, a tensor splitting, or a twisted (semilinear)
//! multiplication.
//!
//! The crate also constructs the *heart* of a permutation group over GF(2):
//! the sum-zero submodule of the permutation module, reduced modulo the
//! all-ones vector when the degree is even. Hearts of doubly transitive
//! groups are the main source of very simple modules at small scale.
//!
//! Everything is deterministic: randomized searches take explicit seeds,
//! subspaces are kept in canonical reduced row-echelon form, and reports
//! serialize reproducibly. See the `book/` guide for a walk-through; its
//! code snippets are compiled as doc-tests (the `bookdoc` module below).

pub mod catalog;
pub mod field;
pub mod heart;
pub mod linalg;
pub mod meataxe;
pub mod normalg;
pub mod perm;
pub mod rep;
pub mod report;
pub mod selfcheck;

/// Book chapters compiled as doc-tests so the guide's snippets stay honest.
#[cfg(doctest)]
mod bookdoc {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(finite_fields, "../../../book/src/finite-fields.md");
    chapter!(matrices, "../../../book/src/matrices-and-subspaces.md");
    chapter!(permutation_groups, "../../../book/src/permutation-groups.md");
    chapter!(representations, "../../../book/src/representations.md");
    chapter!(meataxe_ch, "../../../book/src/meataxe.md");
    chapter!(normal_subalgebras, "../../../book/src/normal-subalgebras.md");
    chapter!(hearts, "../../../book/src/hearts.md");
    chapter!(cli, "../../../book/src/command-line.md");
}
