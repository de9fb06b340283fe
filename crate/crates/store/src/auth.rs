//! Credential enrollment, login and bearer sessions.
//!
//! Passwords are stretched with PBKDF2-HMAC-SHA256 under a per-user random
//! salt. Session tokens are 128 random bits; only their SHA-256 digest is
//! stored.

use std::sync::{Arc, Mutex};

use base64::engine::general_purpose::URL_SAFE_NO_PAD;
use base64::Engine as _;
use chrono::{DateTime, Duration, Utc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use subtle::ConstantTimeEq;
use thiserror::Error;

use hrms_core::credential::MAX_USER_ID_LEN;
use hrms_core::fields::is_identifier;
use hrms_core::Credential;

use crate::engine::{Reader, Store};
use crate::error::StoreError;
use crate::schema::{SessionRecord, Table};

pub const MIN_PASSWORD_LEN: usize = 8;
pub const DEFAULT_ITERATIONS: u32 = 100_000;
const SALT_LEN: usize = 16;
const DIGEST_LEN: usize = 32;
const TOKEN_LEN: usize = 16;

#[derive(Debug, Error)]
pub enum AuthError {
    #[error("user {0:?} already enrolled")]
    DuplicateUser(String),
    #[error("password must be at least {MIN_PASSWORD_LEN} characters")]
    WeakPassword,
    #[error("user id must be 1-{MAX_USER_ID_LEN} letters, digits, '-' or '_'")]
    BadUserId,
    #[error("invalid credentials")]
    InvalidCredentials,
    #[error("session expired")]
    ExpiredSession,
    #[error("unknown session token")]
    UnknownToken,
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("randomness source failed: {0}")]
    Entropy(String),
}

pub trait Clock: Send + Sync {
    fn now(&self) -> DateTime<Utc>;
}

#[derive(Debug, Default, Clone, Copy)]
pub struct SystemClock;

impl Clock for SystemClock {
    fn now(&self) -> DateTime<Utc> {
        Utc::now()
    }
}

/// Settable clock for tests.
#[derive(Debug)]
pub struct ManualClock(Mutex<DateTime<Utc>>);

impl ManualClock {
    pub fn new(start: DateTime<Utc>) -> Self {
        ManualClock(Mutex::new(start))
    }

    pub fn advance(&self, by: Duration) {
        let mut now = self.0.lock().unwrap();
        *now += by;
    }
}

impl Clock for ManualClock {
    fn now(&self) -> DateTime<Utc> {
        *self.0.lock().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Session {
    pub token: String,
    pub user_id: String,
    pub issued_at: DateTime<Utc>,
    pub expires_at: DateTime<Utc>,
}

#[derive(Clone)]
pub struct AuthConfig {
    pub session_ttl: Duration,
    pub iterations: u32,
}

impl Default for AuthConfig {
    fn default() -> Self {
        AuthConfig {
            session_ttl: Duration::hours(8),
            iterations: DEFAULT_ITERATIONS,
        }
    }
}

#[derive(Clone)]
pub struct Authenticator {
    store: Store,
    clock: Arc<dyn Clock>,
    config: AuthConfig,
}

fn random_bytes<const N: usize>() -> Result<[u8; N], AuthError> {
    let mut buf = [0u8; N];
    getrandom::fill(&mut buf).map_err(|e| AuthError::Entropy(e.to_string()))?;
    Ok(buf)
}

fn derive(password: &str, salt: &[u8], iterations: u32) -> [u8; DIGEST_LEN] {
    let mut out = [0u8; DIGEST_LEN];
    pbkdf2::pbkdf2_hmac::<Sha256>(password.as_bytes(), salt, iterations, &mut out);
    out
}

/// Digest of a bearer token as stored in the session table.
pub fn token_digest(token: &str) -> String {
    hex::encode(Sha256::digest(token.as_bytes()))
}

impl Authenticator {
    pub fn new(store: Store, clock: Arc<dyn Clock>, config: AuthConfig) -> Self {
        Authenticator {
            store,
            clock,
            config,
        }
    }

    pub fn store(&self) -> &Store {
        &self.store
    }

    pub fn enroll(&self, user_id: &str, password: &str) -> Result<Credential, AuthError> {
        if user_id.chars().count() > MAX_USER_ID_LEN || !is_identifier(user_id) {
            return Err(AuthError::BadUserId);
        }
        if password.chars().count() < MIN_PASSWORD_LEN {
            return Err(AuthError::WeakPassword);
        }
        let salt = random_bytes::<SALT_LEN>()?;
        let credential = Credential {
            user_id: user_id.to_owned(),
            password_digest: hex::encode(derive(password, &salt, self.config.iterations)),
            salt: hex::encode(salt),
            iterations: self.config.iterations,
        };
        let mut txn = self.store.begin()?;
        if txn.contains(Table::Login, user_id) {
            return Err(AuthError::DuplicateUser(user_id.to_owned()));
        }
        txn.put(&credential)?;
        txn.commit()?;
        tracing::info!(user_id, "credential enrolled");
        Ok(credential)
    }

    /// Unknown users and wrong passwords fail identically, after the same
    /// amount of key stretching.
    pub fn authenticate(&self, user_id: &str, password: &str) -> Result<Session, AuthError> {
        let stored = self.store.read().get::<Credential>(user_id)?;
        let matched = match &stored {
            Some(cred) => {
                let salt = hex::decode(&cred.salt).unwrap_or_default();
                let expected = hex::decode(&cred.password_digest).unwrap_or_default();
                let actual = derive(password, &salt, cred.iterations);
                bool::from(actual.as_slice().ct_eq(&expected))
            }
            None => {
                let _ = derive(password, &[0u8; SALT_LEN], self.config.iterations);
                false
            }
        };
        if !matched {
            tracing::info!(user_id, "login rejected");
            return Err(AuthError::InvalidCredentials);
        }

        let token = URL_SAFE_NO_PAD.encode(random_bytes::<TOKEN_LEN>()?);
        let issued_at = self.clock.now();
        let expires_at = issued_at + self.config.session_ttl;
        let record = SessionRecord {
            token_digest: token_digest(&token),
            user_id: user_id.to_owned(),
            issued_at,
            expires_at,
        };
        self.store.write(|t| t.put(&record))?;
        tracing::info!(user_id, %expires_at, "session issued");
        Ok(Session {
            token,
            user_id: user_id.to_owned(),
            issued_at,
            expires_at,
        })
    }

    pub fn verify_session(&self, token: &str) -> Result<String, AuthError> {
        let record = self
            .store
            .read()
            .get::<SessionRecord>(&token_digest(token))?
            .ok_or(AuthError::UnknownToken)?;
        if self.clock.now() < record.expires_at {
            Ok(record.user_id)
        } else {
            Err(AuthError::ExpiredSession)
        }
    }

    /// Drop expired sessions; returns how many were removed.
    pub fn purge_expired(&self) -> Result<usize, AuthError> {
        let now = self.clock.now();
        let expired: Vec<String> = self
            .store
            .read()
            .list::<SessionRecord>()?
            .into_iter()
            .filter(|s| s.expires_at <= now)
            .map(|s| s.token_digest)
            .collect();
        if !expired.is_empty() {
            self.store.write(|t| {
                for key in &expired {
                    t.delete(Table::Session, key);
                }
                Ok(())
            })?;
        }
        Ok(expired.len())
    }
}
