//! The book's chapters, compiled as doc-tests so the snippets stay in sync
//! with the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}

#[doc = include_str!("../../../book/src/forms.md")]
pub mod forms {}

#[doc = include_str!("../../../book/src/lie-models.md")]
pub mod lie_models {}

#[doc = include_str!("../../../book/src/structures.md")]
pub mod structures {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/cohomology.md")]
pub mod cohomology {}

#[doc = include_str!("../../../book/src/spectral.md")]
pub mod spectral {}

#[doc = include_str!("../../../book/src/symplectic.md")]
pub mod symplectic {}

#[doc = include_str!("../../../book/src/model-files.md")]
pub mod model_files {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
