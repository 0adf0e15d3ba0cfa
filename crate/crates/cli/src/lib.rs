// SPDX-License-Identifier: Apache-2.0
//! Command-line surface of `ttpack`: JSON documents, arrow notation and the
//! `decompose`, `counts`, `verify` and `oracle` subcommands.

pub mod commands;
pub mod document;
pub mod notation;

pub use commands::{exit, Format, Outcome};
pub use document::{CollectionDocument, DocumentKind};
