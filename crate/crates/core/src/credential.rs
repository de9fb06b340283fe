use serde::{Deserialize, Serialize};

/// Login identifiers are at most ten characters.
pub const MAX_USER_ID_LEN: usize = 10;

/// A stored login: the salted digest, never the password itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Credential {
    pub user_id: String,
    /// Hex-encoded digest.
    pub password_digest: String,
    /// Hex-encoded random salt.
    pub salt: String,
    /// Key-stretching rounds used to produce the digest.
    pub iterations: u32,
}
