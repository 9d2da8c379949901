# (table, n, k, d, g, [f_1..f_l]) exactly as printed
TABLES123 = [
    (1, 195, 38, 58, "3", ["6135332413622", "5511163061413", "0760162305021", "41167113347", "1304422614561"]),
    (1, 172, 42, 46, "3", ["16305255301422", "12552443046071", "26367761131227", "56712075265061"]),
    (1, 165, 32, 50, "3", ["7451352027", "7530304175", "16125740433", "70670753002", "42255573462"]),
    (1, 164, 40, 44, "3", ["0711720165373", "4162676126303", "731245452506", "4301603434632"]),
    (1, 156, 36, 44, "11", ["377230104735", "441101605347", "135525223756", "034664137676"]),
    (1, 153, 43, 38, "727", ["03362056173102", "273542165074071", "507007322260431"]),
    (1, 141, 46, 32, "3", ["340604477037257", "5555546265363011", "1447675154362301"]),
    (1, 124, 30, 36, "3", ["3023466614", "104135571", "6774200266", "4032715624"]),
    (1, 122, 60, 20, "3", ["22027750476404545177", "45756235144775354244"]),
    (1, 120, 32, 32, "104", ["3211420427", "0605045201", "45670476662"]),
    (1, 116, 28, 34, "3", ["442732531", "253642371", "2645552751", "4024662711"]),
    (1, 114, 54, 20, "11", ["350273450337664702", "105500762001021221"]),
    (1, 111, 36, 26, "3", ["546217552016", "4415543004", "640326514123"]),
    (1, 110, 50, 20, "14", ["4002671571611246", "0312571544502463"]),
    (1, 110, 40, 2, "730471", ["42213112722401", "0752260652054"]),
    (1, 108, 48, 20, "101", ["3300216514056443", "7000312523564625"]),
    (1, 108, 32, 28, "12", ["74160521111", "45604632562", "40250112373"]),
    (1, 105, 34, 26, "3", ["742252523401", "314437023031", "070422111261"]),
    (1, 105, 29, 28, "771", ["6162561672", "6651775572", "1064436731"]),
    (1, 104, 24, 32, "5", ["57465517", "0174333", "31361042", "64356021"]),
    (1, 100, 40, 20, "1002", ["3367605450137", "2264022063455"]),
    (1, 99, 32, 24, "3", ["65725410163", "17752117321", "5251344657"]),
    (1, 99, 21, 32, "57731", ["2433502", "5112553", "6660032"]),
    (1, 94, 46, 16, "3", ["17570216336424", "6073617230441121"]),
    (1, 93, 30, 24, "3", ["7475563176", "4415177161", "234165126"]),
    (1, 88, 20, 28, "5", ["4642143", "1264541", "7704431", "247022"]),
    (1, 84, 24, 24, "12", ["55575737", "02203365", "31403363"]),
    (1, 78, 24, 22, "5", ["27512541", "02121473", "60544261"]),
    (1, 58, 28, 12, "3", ["4127557501", "402073244"]),
    (1, 52, 24, 12, "5", ["7360021", "5267555"]),
    (2, 213, 35, 68, "7120103605521", ["111124074763", "432070306671", "774512423733"]),
    (2, 158, 39, 44, "35441216370232", ["5172674573162", "1174545113363"]),
    (2, 93, 15, 36, "525412", ["73036", "34767", "46131"]),
    (2, 70, 31, 16, "53", ["0215201037", "17453360511"]),
    (2, 69, 22, 20, "3", ["12325661", "6003045", "10405"]),
    (2, 66, 20, 20, "5", ["3343631", "027677", "0516553"]),
    (3, 70, 30, 16, "14", ["1367566016", "5714137543"]),
    (3, 52, 25, 12, "3", ["156307741", "752562251"]),
]
