use std::sync::Arc;

use chrono::{Duration, TimeZone, Utc};
use hrms_store::{AuthConfig, AuthError, Authenticator, ManualClock, Store};
use proptest::prelude::*;

fn authenticator() -> (tempfile::TempDir, Authenticator) {
    let dir = tempfile::tempdir().unwrap();
    let store = Store::create(dir.path().join("s")).unwrap();
    let clock = Arc::new(ManualClock::new(Utc.with_ymd_and_hms(2024, 1, 1, 0, 0, 0).unwrap()));
    let auth = Authenticator::new(
        store,
        clock,
        AuthConfig {
            session_ttl: Duration::hours(8),
            iterations: 1_000,
        },
    );
    (dir, auth)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn only_the_enrolled_password_logs_in(
        password in "[ -~]{8,24}",
        other in "[ -~]{0,24}",
    ) {
        let (_d, auth) = authenticator();
        auth.enroll("user1", &password).unwrap();
        let session = auth.authenticate("user1", &password).unwrap();
        prop_assert_eq!(auth.verify_session(&session.token).unwrap(), "user1");
        if other != password {
            prop_assert!(matches!(
                auth.authenticate("user1", &other),
                Err(AuthError::InvalidCredentials)
            ));
        }

        let mut dump = Vec::new();
        auth.store().dump(&mut dump).unwrap();
        let text = String::from_utf8(dump).unwrap();
        let escaped = serde_json::to_string(&password).unwrap();
        prop_assert!(!text.contains(escaped.trim_matches('"')));
        prop_assert!(!text.contains(&session.token));
    }
}

#[test]
fn store_files_never_hold_plaintext() {
    let (dir, auth) = authenticator();
    let password = "Plaintext-Needle-42";
    auth.enroll("admin", password).unwrap();
    let session = auth.authenticate("admin", password).unwrap();
    for entry in std::fs::read_dir(dir.path().join("s")).unwrap() {
        let bytes = std::fs::read(entry.unwrap().path()).unwrap();
        let text = String::from_utf8_lossy(&bytes);
        assert!(!text.contains(password));
        assert!(!text.contains(&session.token));
    }
}
