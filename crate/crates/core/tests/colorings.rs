use sumset_ramsey::coloring::{
    find_admissible_a0, load_run_length_file, parse_coloring_spec, RunLength,
};
use sumset_ramsey::dynamics::Word;
use sumset_ramsey::{Coloring, Descriptor};

const SPECS: [&str; 9] = [
    "power2:1,2",
    "geo3:1,2,l=4,x=3,y=8/5",
    "triple:1,2,3",
    "case2:n^2,n^2+2n",
    "recursive:n^2,n^3,a0=15,window=1000000",
    "periodic:1213",
    "explicit:2213",
    "random:seed=7,k=3",
    "constant:2",
];

#[test]
fn run_length_files_reproduce_windows() {
    let dir = std::env::temp_dir();
    for (i, spec) in SPECS.iter().enumerate() {
        let c = Coloring::from_spec(spec).unwrap();
        let n = 20_000;
        let path = dir.join(format!("sumset-ramsey-core-{}-{i}.rl", std::process::id()));
        std::fs::write(&path, c.run_length(n).to_string()).unwrap();
        let back = load_run_length_file(&path).unwrap();
        assert_eq!(back.palette(), c.palette(), "{spec}");
        assert_eq!(back.window(n), c.window(n), "{spec}");
        let text = std::fs::read_to_string(&path).unwrap();
        let word = Word::from_run_length(&text.parse::<RunLength>().unwrap()).unwrap();
        assert_eq!(word.to_run_length().to_string(), text);
        std::fs::remove_file(path).unwrap();
    }
}

#[test]
fn descriptors_rebuild_the_same_coloring() {
    for spec in SPECS {
        let c = Coloring::from_spec(spec).unwrap();
        let text = c.descriptor().to_string();
        let d: Descriptor = text.parse().unwrap();
        let again = Coloring::from_descriptor(&d).unwrap();
        assert_eq!(again.descriptor().to_string(), text);
        assert_eq!(again.colors(1, 5000), c.colors(1, 5000), "{spec}");
        assert_eq!(parse_coloring_spec(spec).unwrap().kind(), d.kind());
    }
}

#[test]
fn smallest_admissible_a0_for_square_and_cube() {
    let (p, q) = ("n^2".parse().unwrap(), "n^3".parse().unwrap());
    assert_eq!(find_admissible_a0(&p, &q, 1_000_000).unwrap(), 15);
}

#[test]
fn colorings_stay_in_their_palettes() {
    for spec in SPECS {
        let c = Coloring::from_spec(spec).unwrap();
        let k = c.palette();
        assert!(
            c.colors(1, 10_000).iter().all(|&x| (1..=k).contains(&x)),
            "{spec}"
        );
        let mut cursor = c.cursor();
        for z in [1u64, 10, 1000, 1 << 20, 1 << 40] {
            assert_eq!(cursor.color(z), c.color(z), "{spec} at {z}");
        }
    }
}
