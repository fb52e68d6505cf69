// Generated from the files in `catalog/`; each file is pinned by its SHA-256.

pub(super) const FILES: &[(&str, &str, &str)] = &[
    ("table1-v13", include_str!("../../catalog/table1-v13.json"), "6860b467361bbc083f8a1a1f29609c56dceac0f1f737c5f598dd0dc34ca2943b"),
    ("table1-v25", include_str!("../../catalog/table1-v25.json"), "0680006583fc10dbc70b073de3fc8d8d82829fe603c369b039c7e227d4387149"),
    ("table1-v37", include_str!("../../catalog/table1-v37.json"), "07fce633c07a20c4d89705b0031bba547ede8f66c9b5ed446824f9bfbd9cfc19"),
    ("table1-v49", include_str!("../../catalog/table1-v49.json"), "bc6fde4f227dd45b9a799d7efd4d9b7f35964f0da28c374e70be34aea26bd417"),
    ("table1-v61", include_str!("../../catalog/table1-v61.json"), "fa9d7483f77e1aed165cc9feed5687c88f0dac706083804609da7de883a12880"),
    ("ex2.2-z15", include_str!("../../catalog/ex2.2-z15.json"), "6051eb13606feb5000c60cf500a0d2db642b9570c557e6cc0aee4692e406184a"),
    ("ex3.4-z63", include_str!("../../catalog/ex3.4-z63.json"), "37e6a89f49703bfd6ab319c62970ce9348f1f86a5976c68570e6771a16100572"),
    ("ex4.1-v16", include_str!("../../catalog/ex4.1-v16.json"), "15dfc4c96d00a58d86ff5a4c524cdeae68d1272200ec0fdf4f86f5c329762f08"),
    ("ex4.2-v28", include_str!("../../catalog/ex4.2-v28.json"), "75aec4ec8777451c100fd560edeeb937a4daba42dcc380b8bd1bab2b8c8d19a5"),
    ("ex4.11-gdd-3-8", include_str!("../../catalog/ex4.11-gdd-3-8.json"), "4391181fc8b396a9872e007fe147f81fcfc8b56c87152c09f7ec470f88678e84"),
    ("ex4.3-v40", include_str!("../../catalog/ex4.3-v40.json"), "f721f023b47a9f09b6f8853d7aae46157649236b31ced386fce87f289cb125e0"),
    ("ex4.3-brdf-v40", include_str!("../../catalog/ex4.3-brdf-v40.json"), "c4cf786106c802e72ae2a7d29375d2f68e8293c8e65094094e5e93c01d3d7da4"),
    ("ex4.4-v52", include_str!("../../catalog/ex4.4-v52.json"), "bb56a5103679b7f10025200380c40c1c5ac5f44eca8fda9d45c8060c7f667258"),
    ("ex4.5-v64", include_str!("../../catalog/ex4.5-v64.json"), "3b608cf8cf54a4f04a3b7b3738491fc1e8295423b9ea3310165dfacdf2b9da58"),
    ("ex4.6-v76", include_str!("../../catalog/ex4.6-v76.json"), "6fd300ee3b7a6eddbeb8616e4d27b3a7a3efdee3072aa114cf24897f80de45c2"),
    ("ex4.7-v88", include_str!("../../catalog/ex4.7-v88.json"), "111766476b6ee9c1a1a27c9b90f09d71809645b8f657efbfb2a5edcd84814fe7"),
    ("ex4.8-v100", include_str!("../../catalog/ex4.8-v100.json"), "d54ad6d8f3a370954ba3d37f94083155973c93568eed577bce0f5d6c5c3bc898"),
    ("ex4.9-v112", include_str!("../../catalog/ex4.9-v112.json"), "1f732560d8d9f5e7a4e29b63e5c6b9a2bc61911b59c16774b8c20999e379f088"),
    ("ex4.10-v124", include_str!("../../catalog/ex4.10-v124.json"), "f6fdd0589ea7717fb1ca630c82f6cd934986bd6173a7838a528bcf1ff0670015"),
    ("a1-v136", include_str!("../../catalog/a1-v136.json"), "2f3b4930e0b11847d111d6e5c014153cfece7a54bd61056f47d18199302b4841"),
    ("a2-v148", include_str!("../../catalog/a2-v148.json"), "cd7db628fad64a0d119dc965b9f2eec30a01fea7a70976187cc9d090df20be06"),
    ("a3-v160", include_str!("../../catalog/a3-v160.json"), "ee13c019b948d76c23a69ad713987347ba6069a31f0df4e2692c3ac8381c76c4"),
    ("a4-v172", include_str!("../../catalog/a4-v172.json"), "71e049093e04ce66b0283c0f78dec436f360aa3418fd00bd45c3b7ee5b4f20bc"),
    ("a5-v184", include_str!("../../catalog/a5-v184.json"), "6f190bb0a926214697ef1a2a6a297a4ad5171adf205f7143ce7f9ec7f1aa2d8c"),
    ("a6-v196", include_str!("../../catalog/a6-v196.json"), "eaf1a2e83119db5b2e13a74c868eb0d4eae7a25494f27a74313af3cee60e6e6f"),
    ("a7-v220", include_str!("../../catalog/a7-v220.json"), "9bb0a9d093ea6b5139f958be5fe76e4162835a2f515cbb4e1507b1ca76023597"),
    ("a8-v268", include_str!("../../catalog/a8-v268.json"), "b6aa9a5a677e2ada03c233ccf96b4f90271cd035a5ea3812e1331330f6807956"),
    ("a9-v292", include_str!("../../catalog/a9-v292.json"), "29661f39c51557420f561bc211824b13ecf7a3225dda9449fbb689849fcb8897"),
    ("a10-v304", include_str!("../../catalog/a10-v304.json"), "07fa7137ff3dfb952b6382d9b5b2cadeb4f4ff83560bb7f728ab9f7ee8583b61"),
    ("a11-v316", include_str!("../../catalog/a11-v316.json"), "ca04d4ffb0d051f79f1edf17321f484a2d3f1be5fa991748eaa90b5979dd531b"),
    ("a12-v472", include_str!("../../catalog/a12-v472.json"), "36974e185ba16806952fa100adb9fe783c5c0016979568c0378b01b70d5c85a2"),
    ("a13-v484", include_str!("../../catalog/a13-v484.json"), "87b7a7a0a8ed97241320ad9a3d40ba750b9a09440690d831feb4d0a289f6d6d7"),
    ("a14-v496", include_str!("../../catalog/a14-v496.json"), "51923ecd0b995571c704aaa1197466a29866b18f36139cc206bb1137ebf0fac6"),
    ("a15-v508", include_str!("../../catalog/a15-v508.json"), "74ab587a6e591f9cefff117367cda669bda17be9ab8da50af6ee93a0e0925757"),
    ("a16-v544", include_str!("../../catalog/a16-v544.json"), "2766a390318efdd9c0a74e5b88219426c6cf17f1e667a2bf817f65e75ff4c5ad"),
    ("a17-v688", include_str!("../../catalog/a17-v688.json"), "783b0fb30cdb7799733eb2f026bbf285e1e6fca05753b6ccddf385ebf6c3fb22"),
    ("ex4.23-v52", include_str!("../../catalog/ex4.23-v52.json"), "217565159c40a3d3361a8fd0f60f22a613e43812e026b8d47119d3ad27d634b9"),
    ("table5-q13", include_str!("../../catalog/table5-q13.json"), "7af537689bd92e78f5edb852734a826cf38fe9eb0dd569858f427a0d800f815c"),
    ("table5-q37", include_str!("../../catalog/table5-q37.json"), "9f220edb7ef996a931a82d1435fa211a8d23cb0b3c5b61253ba5e46e0ca4f994"),
    ("table5-q61", include_str!("../../catalog/table5-q61.json"), "45550422f0e49444c4b0c8d934826bcc79dc22b1fe5766e1d18955d739fa7110"),
    ("table5-q73", include_str!("../../catalog/table5-q73.json"), "fd97d546c7189d11ac2d2912be98fb7d142164c559ee1d3f383720b419da087b"),
    ("table5-q97", include_str!("../../catalog/table5-q97.json"), "149d0f3355ed8e026e560f4a4e1ec2afd355ff23a1de6cb3ce78abe95c5de062"),
    ("table5-q109", include_str!("../../catalog/table5-q109.json"), "5f7939696947808cf5afb39827963fe6a574c6bf921368649e8b5453fc224911"),
    ("table5-q157", include_str!("../../catalog/table5-q157.json"), "59012cd57a58b4e90c70b06aa1a1b8555d9ef595506b8b33b650345b4f470abe"),
    ("table5-q181", include_str!("../../catalog/table5-q181.json"), "f973c6e799e62f70839890cfd7c21b2c1875f07b3dd25d483de68440c76432fe"),
    ("table5-q193", include_str!("../../catalog/table5-q193.json"), "fb66ef890d364843795f830fdba281cec4db5b617760013216a3c1e5ecff8db0"),
    ("cor4.24-q25", include_str!("../../catalog/cor4.24-q25.json"), "03adcd494682ad457383b0093e0a0a2020d2927d701bbcda22f4a9ee32f09842"),
    ("cor4.24-q49", include_str!("../../catalog/cor4.24-q49.json"), "dd34f550a9d56d1c29398e0ea95605e1c1523237ba7add8c7e175b61806f38e3"),
    ("cor4.24-q121", include_str!("../../catalog/cor4.24-q121.json"), "256370ed3870e749b17f7c7164925e3b414e30be685990e9c1745b793c304e05"),
    ("search-brdf-v76", include_str!("../../catalog/search-brdf-v76.json"), "72b72e554b848a537ecbfb6e40f8655ebe8157a267f9e98b602138abfa6901e4"),
    ("search-brdf-v160", include_str!("../../catalog/search-brdf-v160.json"), "a2b23ae0d1df4ca69fd54b3c437b120e9111efe1b6dff598eea170086729d660"),
    ("table3-v280", include_str!("../../catalog/table3-v280.json"), "bbfec22d4b6a2df6b933a8eced96a7f81d1ca71170991283b6aa1e2d14446aea"),
    ("table3-v364", include_str!("../../catalog/table3-v364.json"), "bdd77eec8a703c729708fc7fe55ec4d166dd3c4eac7a47bf2384a08907baf697"),
    ("table3-v520", include_str!("../../catalog/table3-v520.json"), "0f4797411585ad937c0f7e9ab96f63302b73f85bf51f3e39a8f8c6a983b1f237"),
    ("table3-v532", include_str!("../../catalog/table3-v532.json"), "221c7bfe8787c8330b6609145b9995e2acfc06db890d4fd352e4ed6bbfe2d0ef"),
    ("table3-v700", include_str!("../../catalog/table3-v700.json"), "b207ecb673da90d81f6c7b23233026550ede920c5be7caf6c619ca7099cd3448"),
    ("table3-v868", include_str!("../../catalog/table3-v868.json"), "3e5325360d9bf6048a98c2368fa8a86f241032b5fb17cc4caafc6bdd7f887096"),
    ("cor4.18-v376", include_str!("../../catalog/cor4.18-v376.json"), "232fec22bef34605aedff603e5843fa7f8328bc0c9c54772c4a6dc4e621e6596"),
    ("cor4.18-v388", include_str!("../../catalog/cor4.18-v388.json"), "44ede9cde00d35029f2ba2f1b8afaa653e9676ad8fe989a444ec82e525f028d3"),
    ("cor4.18-v544", include_str!("../../catalog/cor4.18-v544.json"), "fb75d1f0244ca3d235afb96723a4d86131477ef3182247f2697e4f596f3b7af0"),
    ("cor4.18-v556", include_str!("../../catalog/cor4.18-v556.json"), "12535a468323361ea769335e56528742379a473cef39f1fe8bfff8e206a864d0"),
    ("cor4.18-v568", include_str!("../../catalog/cor4.18-v568.json"), "578aa91605e1edbaef332541df1b627c91308b0eb1310a182a9d1646f8b10079"),
    ("cor4.18-v580", include_str!("../../catalog/cor4.18-v580.json"), "bf016e345bf2aef71cf18f7df5951cafc0964a40bcd10d7d8de633a7ffae755f"),
    ("cor4.18-v880", include_str!("../../catalog/cor4.18-v880.json"), "3fbbc21788c7cf534dccbfea7c8beda8ac3605d9c3bfd0fadb9be47fe8934d55"),
    ("cor4.18-v892", include_str!("../../catalog/cor4.18-v892.json"), "9582b58a2fd91e62e7c2c6397e6f42a2397899e1d6f873870f504217aa2afda2"),
    ("cor4.18-v1120", include_str!("../../catalog/cor4.18-v1120.json"), "9a5650e547523e114e2a689a3cdf3b7c06cca25e48dbadb6fe99317b13f6cdf2"),
    ("cor4.18-v1132", include_str!("../../catalog/cor4.18-v1132.json"), "771ddc8bdda428a0f735a05e0703b99c1c1f380c00d75bba6a381727944f0fed"),
    ("cor4.18-v1144", include_str!("../../catalog/cor4.18-v1144.json"), "8a1ccd4fe6b68652a77966208086d5d33ca041678002fba37e4b8ce623581bef"),
    ("cor4.18-v1156", include_str!("../../catalog/cor4.18-v1156.json"), "872c5cf837dfb873f090302efc326d79d7bbd5ec1d06203f8c3dc1f653e350bc"),
];
