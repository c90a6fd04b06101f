use std::path::PathBuf;
use std::process::Command;

#[test]
fn c_program_links_against_static_library() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // test binary lives in <target>/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libsaxl_ffi.a");
    if !lib.exists() {
        build_static_lib(profile_dir);
    }
    assert!(lib.exists(), "{} not built", lib.display());
    let out_dir = tempfile_dir();
    let bin = out_dir.join("smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).env("SAXL_CACHE_DIR", &out_dir).output().unwrap();
    assert!(out.status.success(), "smoke exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
    let _ = std::fs::remove_dir_all(&out_dir);
}

// `cargo test` builds only the rlib, so build the archive on demand.
fn build_static_lib(profile_dir: &std::path::Path) {
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".to_string());
    let mut cmd = Command::new(cargo);
    cmd.args(["build", "-q", "-p", "saxl-ffi"]);
    match profile_dir.file_name().and_then(|n| n.to_str()) {
        Some("debug") => {}
        Some(p) => {
            cmd.args(["--profile", p]);
        }
        None => return,
    }
    let status = cmd.current_dir(env!("CARGO_MANIFEST_DIR")).status().unwrap();
    assert!(status.success(), "building libsaxl_ffi.a failed");
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    match Command::new(&cc).arg("--version").output() {
        Ok(o) if o.status.success() => Ok(cc),
        _ => Err(()),
    }
}

fn tempfile_dir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("saxl-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
